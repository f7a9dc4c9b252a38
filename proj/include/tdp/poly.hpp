#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdp/errors.hpp"

namespace tdp {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial with exact arbitrary-precision integer coefficients.
/// coefficient(i) is the coefficient of x^i. The zero polynomial is the
/// empty coefficient sequence and compares equal only to itself.
class IntPoly {
public:
    IntPoly() = default;

    static IntPoly constant(BigInt c) {
        IntPoly p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }

    static IntPoly one() { return constant(1); }

    static IntPoly monomial(int degree, BigInt coeff = 1) {
        IntPoly p;
        if (coeff != 0) {
            p.coeffs_.assign(std::size_t(degree) + 1, 0);
            p.coeffs_.back() = std::move(coeff);
        }
        return p;
    }

    static IntPoly x() { return monomial(1); }

    static IntPoly from_coefficients(std::vector<BigInt> cs) {
        IntPoly p;
        p.coeffs_ = std::move(cs);
        p.normalize();
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return int(coeffs_.size()) - 1; }

    const BigInt& coefficient(int i) const {
        static const BigInt zero = 0;
        return (i >= 0 && i < int(coeffs_.size())) ? coeffs_[std::size_t(i)] : zero;
    }

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    /// Smallest exponent with nonzero coefficient; 0 for the zero polynomial.
    int valuation() const noexcept {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return int(i);
        return 0;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    IntPoly& operator-=(const IntPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        IntPoly out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        out.normalize();
        return out;
    }

    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly pow(int m) const {
        if (m < 0) throw precondition_error("polynomial power requires m >= 0");
        IntPoly out = one(), base = *this;
        while (m > 0) {
            if (m & 1) out *= base;
            m >>= 1;
            if (m) base *= base;
        }
        return out;
    }

    /// Multiplication by x^k.
    IntPoly shifted(int k) const {
        if (is_zero()) return {};
        IntPoly out;
        out.coeffs_.assign(std::size_t(k), 0);
        out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return out;
    }

    BigInt evaluate(const BigInt& t) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// Exact division by (x - r); empty when the remainder is nonzero.
    std::optional<IntPoly> divide_by_root(const BigInt& r) const {
        if (is_zero()) return std::nullopt;
        std::vector<BigInt> q(coeffs_.size() - 1, 0);
        BigInt carry = 0;
        for (int i = degree(); i >= 1; --i) {
            carry = carry * r + coeffs_[std::size_t(i)];
            q[std::size_t(i) - 1] = carry;
        }
        if (carry * r + coeffs_[0] != 0) return std::nullopt;
        return from_coefficients(std::move(q));
    }

    bool operator==(const IntPoly&) const = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& c = coeffs_[std::size_t(i)];
            if (c == 0) continue;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            BigInt a = abs(c);
            if (a != 1 || i == 0) out += a.str();
            if (i >= 1) out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

/// All integer roots with exact multiplicities, including 0 with
/// multiplicity = valuation. Candidates are the divisors of the deflated
/// constant term, both signs, capped by the Cauchy bound.
inline std::vector<std::pair<BigInt, int>> integer_roots(const IntPoly& p) {
    if (p.is_zero()) throw precondition_error("integer_roots: zero polynomial");
    std::vector<std::pair<BigInt, int>> out;
    int val = p.valuation();
    if (val > 0) out.emplace_back(0, val);

    std::vector<BigInt> cs(p.coefficients().begin() + val, p.coefficients().end());
    IntPoly q = IntPoly::from_coefficients(std::move(cs));
    if (q.degree() == 0) return out;

    BigInt lead = abs(q.coefficient(q.degree()));
    BigInt cauchy = 1;
    for (int i = 0; i < q.degree(); ++i) {
        BigInt b = abs(q.coefficient(i)) / lead + 2;
        cauchy = std::max(cauchy, b);
    }

    BigInt m = abs(q.coefficient(0));
    std::vector<BigInt> divisors;
    for (BigInt i = 1; i * i <= m && i <= cauchy; ++i) {
        if (m % i != 0) continue;
        divisors.push_back(i);
        if (BigInt j = m / i; j != i && j <= cauchy) divisors.push_back(j);
    }

    for (const BigInt& d : divisors)
        for (int sign : {1, -1}) {
            BigInt r = sign * d;
            int mult = 0;
            IntPoly rest = q;
            while (true) {
                auto div = rest.divide_by_root(r);
                if (!div) break;
                rest = std::move(*div);
                ++mult;
            }
            if (mult > 0) out.emplace_back(r, mult);
        }

    std::sort(out.begin(), out.end());
    return out;
}

struct TwoRootForm {
    int alpha = 0;
    BigInt c = 0;
    int beta = 0;

    bool operator==(const TwoRootForm&) const = default;
};

/// Matches p == x^alpha (x+c)^beta exactly, c >= 1, alpha >= 1, beta >= 1.
/// Verified by exact reconstruction, never numerically.
inline std::optional<TwoRootForm> match_two_root_form(const IntPoly& p) {
    if (p.is_zero()) throw precondition_error("match_two_root_form: zero polynomial");
    int alpha = p.valuation();
    if (alpha < 1) return std::nullopt;
    std::vector<BigInt> cs(p.coefficients().begin() + alpha, p.coefficients().end());
    IntPoly q = IntPoly::from_coefficients(std::move(cs));
    int beta = q.degree();
    if (beta < 1 || q.coefficient(beta) != 1) return std::nullopt;
    BigInt c0 = q.coefficient(0);
    if (c0 < 1) return std::nullopt;

    // c = exact beta-th root of the constant term, if it has one
    BigInt lo = 1, hi = c0;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        BigInt powv = 1;
        for (int i = 0; i < beta && powv <= c0; ++i) powv *= mid;
        if (powv < c0)
            lo = mid + 1;
        else
            hi = mid;
    }
    BigInt c = lo, check = 1;
    for (int i = 0; i < beta; ++i) check *= c;
    if (check != c0) return std::nullopt;

    IntPoly xc = IntPoly::from_coefficients({c, 1});
    if (xc.pow(beta) != q) return std::nullopt;
    return TwoRootForm{alpha, c, beta};
}

/// (2^n - 1)^(1/delta): the radius of the disk centered at -1 that
/// contains every total domination root of a graph with min degree delta.
inline double root_bound_radius(int n, int delta) {
    if (n < 1) throw precondition_error("root_bound_radius: n >= 1 required");
    if (delta < 1)
        throw precondition_error("root_bound_radius: delta >= 1 required (isolated vertex)");
    return std::pow(std::pow(2.0, double(n)) - 1.0, 1.0 / double(delta));
}

} // namespace tdp
