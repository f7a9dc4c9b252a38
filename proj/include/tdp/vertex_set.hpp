#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tdp {

/// Subset of the vertices 0..n-1 of a fixed-order graph, stored as a bit
/// vector. This is the universal currency for dominating sets and
/// neighborhood unions; all set algebra is word-parallel.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    static VertexSet single(int universe, int v) {
        VertexSet s(universe);
        s.add(v);
        return s;
    }

    int universe() const noexcept { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        assert(n_ == other.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const = default;

    /// Smallest member, or -1 when empty.
    int first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    /// Smallest member greater than v, or -1.
    int next_after(int v) const {
        for (int u = v + 1; u < n_; ++u)
            if (contains(u)) return u;
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(int(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    std::string to_string() const {
        std::string out = "{";
        bool sep = false;
        for (int v : to_vector()) {
            if (sep) out += ',';
            out += std::to_string(v);
            sep = true;
        }
        return out + "}";
    }

    std::size_t hash() const noexcept {
        std::size_t h = std::hash<int>{}(n_);
        for (auto w : words_) h = h * 1099511628211ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace tdp

template <>
struct std::hash<tdp::VertexSet> {
    std::size_t operator()(const tdp::VertexSet& s) const noexcept { return s.hash(); }
};
