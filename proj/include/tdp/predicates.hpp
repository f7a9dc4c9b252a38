#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

#include "tdp/count.hpp"
#include "tdp/graph.hpp"

namespace tdp {

enum class CheckMode { exact, sufficient };

/// v is total domination-covered when the total dominating sets of G\v are
/// exactly the total dominating sets of G avoiding v. The sufficient test
/// looks for a neighbor u (u != v; taking u = v would mark every vertex)
/// with N[u] within N[v].
inline bool is_td_covered(const Graph& g, int v, CheckMode mode,
                          const EnumerationOptions& opt = {}) {
    const int n = g.order();
    if (v < 0 || v >= n) throw not_found_error("is_td_covered: no such vertex");

    if (mode == CheckMode::sufficient) {
        VertexSet closed_v = g.closed_neighborhood(v);
        for (int u : g.neighbors(v).to_vector())
            if (g.closed_neighborhood(u).is_subset_of(closed_v)) return true;
        return false;
    }

    detail::check_enumerable(g, opt);
    Graph without = g.delete_vertex(v);
    auto adj_g = g.adjacency_masks();
    auto adj_w = without.adjacency_masks();
    const std::uint64_t full_g = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const std::uint64_t full_w = (std::uint64_t{1} << (n - 1)) - 1;
    const std::uint64_t low = (std::uint64_t{1} << v) - 1;

    // enumerate D over V \ {v}; both inclusions of the definition must hold
    for (std::uint64_t mask = 0; mask < std::uint64_t{1} << (n - 1); ++mask) {
        std::uint64_t cover_w = 0, cover_g = 0;
        std::uint64_t m = mask;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            cover_w |= adj_w[i];
            cover_g |= adj_g[i < v ? i : i + 1];
        }
        if ((cover_w == full_w) != (cover_g == full_g)) return false;
    }
    return true;
}

/// Support vertices are exactly the essential vertices (D_t(G\v,x) = 0).
inline bool is_essential(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw not_found_error("is_essential: no such vertex");
    bool support = g.supports_and_leaves().second.contains(v);
#ifndef NDEBUG
    if (g.order() >= 2 && !g.has_isolated_vertex())
        assert(support == g.delete_vertex(v).has_isolated_vertex());
#endif
    return support;
}

/// e is irrelevant when D_t(G,x) = D_t(G\e,x). Sufficient tests:
///   (a) each endpoint has a support-vertex neighbor other than the other
///       endpoint, so both stay dominated by vertices every total
///       dominating set must contain;
///   (b) e joins true twins (N[u] = N[v]) and G\N[u] is nonempty with an
///       isolated vertex, so the twin recurrence's x^2 D_t(G\N[u]) term
///       vanishes.
inline bool is_irrelevant_edge(const Graph& g, Edge e, CheckMode mode,
                               const EnumerationOptions& opt = {}) {
    if (!g.has_edge(e.u, e.v)) throw not_found_error("is_irrelevant_edge: no such edge");

    if (mode == CheckMode::sufficient) {
        VertexSet supports = g.supports_and_leaves().second;
        auto has_other_support_neighbor = [&](int a, int b) {
            VertexSet s = g.neighbors(a) & supports;
            s.remove(b);
            return !s.empty();
        };
        if (has_other_support_neighbor(e.u, e.v) && has_other_support_neighbor(e.v, e.u))
            return true;
        if (g.closed_neighborhood(e.u) == g.closed_neighborhood(e.v)) {
            Graph rest = g.delete_vertices(g.closed_neighborhood(e.u));
            if (rest.order() > 0 && rest.has_isolated_vertex()) return true;
        }
        return false;
    }

    detail::check_enumerable(g, opt);
    return count_all(g, opt).counts == count_all(g.delete_edge(e), opt).counts;
}

} // namespace tdp
