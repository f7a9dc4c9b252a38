#pragma once

// Independent reference implementations for the test suite. These stay
// deliberately naive and separate from the library's computation paths:
// straight subset loops over adjacency lists, permutation-based
// isomorphism, and a from-scratch graph6 writer.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tdp/graph.hpp"
#include "tdp/poly.hpp"

namespace oracle {

/// d_t(G,i) for all i by the definition: loop every subset, test every
/// vertex for a neighbor inside the subset.
inline std::vector<tdp::BigInt> tds_counts(const tdp::Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (tdp::Edge e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<tdp::BigInt> counts(std::size_t(n) + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool total = true;
        for (int v = 0; v < n && total; ++v) {
            bool dominated = false;
            for (int w : adj[v])
                if ((mask >> w) & 1) {
                    dominated = true;
                    break;
                }
            total = dominated;
        }
        if (total) ++counts[std::size_t(std::popcount(mask))];
    }
    if (n == 0) counts[0] = 1;
    return counts;
}

inline tdp::IntPoly tds_polynomial(const tdp::Graph& g) {
    return tdp::IntPoly::from_coefficients(tds_counts(g));
}

inline int tds_gamma(const tdp::Graph& g) {
    auto counts = tds_counts(g);
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] > 0) return int(i);
    return -1;
}

/// Connectivity by deleting every subset in increasing size order.
inline int kappa(const tdp::Graph& g) {
    const int n = g.order();
    if (!g.is_connected()) return 0;
    auto connected_after_removal = [&](std::uint64_t removed) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (!((removed >> v) & 1)) keep.push_back(v);
        if (keep.empty()) return true;
        std::vector<int> stack{keep[0]};
        std::set<int> seen{keep[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : keep)
                if (g.has_edge(v, w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        return seen.size() == keep.size();
    };
    for (int size = 1; size <= n - 2; ++size)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            if (std::popcount(mask) == size && !connected_after_removal(mask)) return size;
    return n - 1;
}

/// Isomorphism by trying all vertex permutations; order <= 8 or so.
inline bool isomorphic(const tdp::Graph& a, const tdp::Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    const int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Count of k-regular graphs on n vertices up to isomorphism, by filtering
/// every labeled graph; n <= 6.
inline int count_regular_up_to_iso(int n, int k) {
    const int slots = n * (n - 1) / 2;
    std::vector<tdp::Graph> reps;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        tdp::Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        if (!g.is_regular(k)) continue;
        bool fresh = true;
        for (const tdp::Graph& rep : reps)
            if (isomorphic(rep, g)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(g);
    }
    return int(reps.size());
}

/// graph6 written directly from the format description: N(n) then the
/// column-major upper triangle packed big-endian into bytes + 63.
inline std::string graph6_reference(const tdp::Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else {
        out.push_back('~');
        out.push_back(char(63 + ((n >> 12) & 63)));
        out.push_back(char(63 + ((n >> 6) & 63)));
        out.push_back(char(63 + (n & 63)));
    }
    std::vector<int> bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) bits.push_back(g.has_edge(row, col) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int j = 0; j < 6; ++j) value = value * 2 + bits[i + std::size_t(j)];
        out.push_back(char(63 + value));
    }
    return out;
}

/// Deterministic random graph stream for property tests.
inline tdp::Graph random_graph(std::mt19937& rng, int n, double p = 0.4) {
    tdp::Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline tdp::IntPoly random_poly(std::mt19937& rng, int max_degree, int coeff_range = 20) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    std::vector<tdp::BigInt> cs(std::size_t(deg(rng)) + 1);
    for (auto& c : cs) c = coeff(rng);
    return tdp::IntPoly::from_coefficients(std::move(cs));
}

} // namespace oracle
