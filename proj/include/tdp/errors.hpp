#pragma once

#include <stdexcept>
#include <string>

namespace tdp {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A constructor parameter violates a documented constraint (e.g. Cycle(2)).
class parameter_error : public error {
public:
    using error::error;
};

/// A referenced vertex or edge does not exist.
class not_found_error : public error {
public:
    using error::error;
};

/// The input is too large for the requested exhaustive computation.
class size_error : public error {
public:
    using error::error;
};

/// A documented precondition of an operation does not hold.
class precondition_error : public error {
public:
    using error::error;
};

/// A theorem hypothesis required by a closed form does not hold.
class hypothesis_error : public error {
public:
    using error::error;
};

/// An iterative numeric method failed to converge.
class numeric_error : public error {
public:
    using error::error;
};

/// Malformed textual input; carries the byte offset of the first bad byte.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Two routes that must agree exactly disagreed; signals a bug, not bad input.
class internal_consistency_error : public error {
public:
    using error::error;
};

} // namespace tdp
