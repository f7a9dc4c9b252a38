#pragma once

#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "tdp/graph.hpp"

namespace tdp {

// Graph family constructors. Vertex numbering is deterministic and part of
// each builder's contract; see README.md ("Family vertex numbering").

struct PathSpec {
    int n;
};
struct CycleSpec {
    int n;
};
struct CompleteSpec {
    int n;
};
/// Star with n vertices total: center 0, leaves 1..n-1.
struct StarSpec {
    int n;
};
/// Corona g o h: vertex i of g is joined to every vertex of the i-th copy
/// of h. Copies occupy consecutive blocks after g's vertices.
struct CoronaSpec {
    Graph g;
    Graph h;
};
/// Firecracker F(n,k): n k-stars, one leaf of each linked into a path.
/// Star i occupies [i*k, (i+1)*k): center i*k, link leaf i*k + k-1.
struct FirecrackerSpec {
    int n;
    int k;
};
/// F(k_1,...,k_n): same layout with per-star sizes.
struct GeneralizedFirecrackerSpec {
    std::vector<int> ks;
};
/// H(3): each vertex v of the base gains a pendant path v - (n+2v) - (n+2v+1).
struct H3Spec {
    Graph base;
};
/// H_k: two paths a_1 b_1 ... a_k b_k and c_1 d_1 ... c_k d_k with a_i~d_i,
/// b_i~c_i, a_1~b_k, c_1~d_k. Blocks: a = [0,k), b = [k,2k), c = [2k,3k),
/// d = [3k,4k).
struct HFamilySpec {
    int k;
};
/// GP(n,k): outer cycle u_0..u_{n-1} = 0..n-1, spokes u_i~w_i with
/// w_i = n+i, inner edges w_i ~ w_{(i+k) mod n}.
struct GeneralizedPetersenSpec {
    int n;
    int k;
};
struct DisjointUnionSpec {
    Graph g;
    Graph h;
};

using GraphFamilySpec =
    std::variant<PathSpec, CycleSpec, CompleteSpec, StarSpec, CoronaSpec, FirecrackerSpec,
                 GeneralizedFirecrackerSpec, H3Spec, HFamilySpec, GeneralizedPetersenSpec,
                 DisjointUnionSpec>;

namespace detail {

inline void require(bool ok, const std::string& constraint) {
    if (!ok) throw parameter_error("family parameter violates: " + constraint);
}

} // namespace detail

inline Graph build(const PathSpec& s) {
    detail::require(s.n >= 1, "path order >= 1");
    Graph g(s.n);
    for (int i = 0; i + 1 < s.n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph build(const CycleSpec& s) {
    detail::require(s.n >= 3, "cycle order >= 3");
    Graph g(s.n);
    for (int i = 0; i < s.n; ++i) g.add_edge(i, (i + 1) % s.n);
    return g;
}

inline Graph build(const CompleteSpec& s) {
    detail::require(s.n >= 1, "complete order >= 1");
    Graph g(s.n);
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph build(const StarSpec& s) {
    detail::require(s.n >= 1, "star order >= 1");
    Graph g(s.n);
    for (int i = 1; i < s.n; ++i) g.add_edge(0, i);
    return g;
}

inline Graph build(const CoronaSpec& s) {
    detail::require(s.g.order() >= 1, "corona base order >= 1");
    int n = s.g.order(), m = s.h.order();
    Graph g(n + n * m);
    for (Edge e : s.g.edges()) g.add_edge(e.u, e.v);
    for (int i = 0; i < n; ++i) {
        int base = n + i * m;
        for (Edge e : s.h.edges()) g.add_edge(base + e.u, base + e.v);
        for (int j = 0; j < m; ++j) g.add_edge(i, base + j);
    }
    return g;
}

inline Graph build(const GeneralizedFirecrackerSpec& s) {
    detail::require(!s.ks.empty(), "firecracker needs >= 1 star");
    for (int k : s.ks) detail::require(k >= 2, "star size k_i >= 2");
    int total = std::accumulate(s.ks.begin(), s.ks.end(), 0);
    Graph g(total);
    std::vector<int> link;
    int base = 0;
    for (int k : s.ks) {
        for (int j = 1; j < k; ++j) g.add_edge(base, base + j);
        link.push_back(base + k - 1);
        base += k;
    }
    for (std::size_t i = 0; i + 1 < link.size(); ++i) g.add_edge(link[i], link[i + 1]);
    return g;
}

inline Graph build(const FirecrackerSpec& s) {
    detail::require(s.n >= 1, "firecracker n >= 1");
    detail::require(s.k >= 2, "firecracker k >= 2");
    return build(GeneralizedFirecrackerSpec{std::vector<int>(std::size_t(s.n), s.k)});
}

inline Graph build(const H3Spec& s) {
    int n = s.base.order();
    detail::require(n >= 1, "H(3) base order >= 1");
    Graph g(3 * n);
    for (Edge e : s.base.edges()) g.add_edge(e.u, e.v);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, n + 2 * i);
        g.add_edge(n + 2 * i, n + 2 * i + 1);
    }
    return g;
}

inline Graph build(const HFamilySpec& s) {
    detail::require(s.k >= 2, "H_k requires k >= 2");
    int k = s.k;
    auto a = [&](int i) { return i; };
    auto b = [&](int i) { return k + i; };
    auto c = [&](int i) { return 2 * k + i; };
    auto d = [&](int i) { return 3 * k + i; };
    Graph g(4 * k);
    for (int i = 0; i < k; ++i) {
        g.add_edge(a(i), b(i));
        g.add_edge(c(i), d(i));
        if (i + 1 < k) {
            g.add_edge(b(i), a(i + 1));
            g.add_edge(d(i), c(i + 1));
        }
        g.add_edge(a(i), d(i));
        g.add_edge(b(i), c(i));
    }
    g.add_edge(a(0), b(k - 1));
    g.add_edge(c(0), d(k - 1));
    return g;
}

inline Graph build(const GeneralizedPetersenSpec& s) {
    detail::require(s.n >= 3, "GP(n,k) requires n >= 3");
    detail::require(s.k >= 1 && 2 * s.k < s.n, "GP(n,k) requires 1 <= k < n/2");
    Graph g(2 * s.n);
    for (int i = 0; i < s.n; ++i) {
        g.add_edge(i, (i + 1) % s.n);
        g.add_edge(i, s.n + i);
        g.add_edge(s.n + i, s.n + (i + s.k) % s.n);
    }
    return g;
}

inline Graph build(const DisjointUnionSpec& s) { return s.g.disjoint_union(s.h); }

inline Graph build(const GraphFamilySpec& spec) {
    return std::visit([](const auto& s) { return build(s); }, spec);
}

inline Graph petersen() { return build(GeneralizedPetersenSpec{5, 2}); }

} // namespace tdp
