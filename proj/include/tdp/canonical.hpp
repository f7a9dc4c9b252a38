#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tdp/graph.hpp"
#include "tdp/graph6.hpp"

namespace tdp {

/// Orbits of the full automorphism group, plus a witness set of
/// automorphisms sufficient to generate that orbit partition.
struct OrbitPartition {
    std::vector<std::vector<int>> orbits;
    std::vector<std::vector<int>> generators;
    std::uint64_t automorphism_count = 0;

    bool is_vertex_transitive() const noexcept { return orbits.size() <= 1; }
};

namespace detail {

/// Color refinement on an ordered partition. Colors are cell ordinals, so
/// the refined coloring (values included) is an isomorphism invariant.
inline void refine_colors(const std::vector<std::uint64_t>& adj, std::vector<int>& colors) {
    const int n = int(adj.size());
    if (n == 0) return;
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n), next(n);
    for (;;) {
        for (int v = 0; v < n; ++v) {
            sig[v].clear();
            sig[v].push_back(colors[v]);
            std::uint64_t w = adj[v];
            while (w) {
                sig[v].push_back(colors[std::countr_zero(w)]);
                w &= w - 1;
            }
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a] < sig[b]; });
        int c = 0;
        next[order[0]] = 0;
        for (int i = 1; i < n; ++i) {
            if (sig[order[i]] != sig[order[i - 1]]) ++c;
            next[order[i]] = c;
        }
        if (next == colors) return;
        colors = next;
    }
}

/// First color class of size >= 2, by color id; -1 if discrete.
inline int first_non_singleton(const std::vector<int>& colors) {
    const int n = int(colors.size());
    std::vector<int> size(n, 0);
    for (int c : colors) ++size[c];
    int best = -1;
    for (int v = 0; v < n; ++v)
        if (size[colors[v]] >= 2 && (best == -1 || colors[v] < colors[best])) best = v;
    return best == -1 ? -1 : colors[best];
}

/// Splits {v} off the front of its cell and renumbers subsequent cells.
inline std::vector<int> individualize(const std::vector<int>& colors, int v) {
    std::vector<int> out(colors.size());
    int cv = colors[v];
    for (std::size_t u = 0; u < colors.size(); ++u) {
        if (colors[u] < cv)
            out[u] = colors[u];
        else if (colors[u] > cv)
            out[u] = colors[u] + 1;
        else
            out[u] = int(u) == v ? cv : cv + 1;
    }
    return out;
}

/// graph6 line of the graph relabeled so vertex v gets index label[v].
inline std::string labeled_graph6(const std::vector<std::uint64_t>& adj,
                                  const std::vector<int>& label) {
    const int n = int(adj.size());
    std::vector<int> vert_of(n);
    for (int v = 0; v < n; ++v) vert_of[label[v]] = v;
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int bit = 5, acc = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if ((adj[vert_of[row]] >> vert_of[col]) & 1) acc |= 1 << bit;
            if (--bit < 0) {
                out.push_back(char(acc + 63));
                acc = 0;
                bit = 5;
            }
        }
    if (bit != 5) out.push_back(char(acc + 63));
    return out;
}

/// True when the transposition (u v) is an automorphism: equal
/// neighborhoods for non-adjacent vertices, equal aside from each other
/// for adjacent ones. Such vertices produce identical search subtrees.
inline bool swap_interchangeable(const std::vector<std::uint64_t>& adj, int u, int v) {
    const std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
    if (adj[u] == adj[v]) return true;
    return (adj[u] & bv) && (adj[u] & ~bv) == (adj[v] & ~bu);
}

inline void canon_search(const std::vector<std::uint64_t>& adj, std::vector<int> colors,
                         std::string& best) {
    refine_colors(adj, colors);
    int cell = first_non_singleton(colors);
    if (cell == -1) {
        std::string cand = labeled_graph6(adj, colors);
        if (best.empty() || cand < best) best = std::move(cand);
        return;
    }
    // branch once per twin class: a skipped vertex has an explored twin
    // whose subtree attains the same minimum
    std::vector<int> tried;
    for (int v = 0; v < int(colors.size()); ++v) {
        if (colors[v] != cell) continue;
        bool redundant = false;
        for (int u : tried)
            if (swap_interchangeable(adj, u, v)) {
                redundant = true;
                break;
            }
        if (redundant) continue;
        tried.push_back(v);
        canon_search(adj, individualize(colors, v), best);
    }
}

} // namespace detail

/// Canonical byte form of a graph: the lexicographically least graph6 line
/// over the labelings produced by the individualization-refinement tree.
/// Equal strings <=> isomorphic graphs. Deterministic.
inline std::string canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 64) throw size_error("canonical_form supports order <= 64");
    if (n == 0) return graph6_encode(g);
    auto adj = g.adjacency_masks();
    std::string best;
    detail::canon_search(adj, std::vector<int>(n, 0), best);
    return best;
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace detail

/// Orbit partition of Aut(G) by exhaustive backtracking over color- and
/// adjacency-consistent vertex maps. Exponential in the worst case, so
/// inputs above vertex_limit are refused.
inline OrbitPartition automorphism_orbits(const Graph& g, int vertex_limit = 64) {
    const int n = g.order();
    if (n > vertex_limit || n > 64)
        throw size_error("automorphism search refuses order " + std::to_string(n) +
                         " (limit " + std::to_string(std::min(vertex_limit, 64)) + ")");
    OrbitPartition out;
    if (n == 0) return out;

    auto adj = g.adjacency_masks();
    std::vector<int> colors(n, 0);
    detail::refine_colors(adj, colors);

    detail::UnionFind uf(n);
    std::vector<int> img(n, -1);
    std::uint64_t used = 0;

    auto dfs = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++out.automorphism_count;
            bool merged = false;
            for (int w = 0; w < n; ++w) merged |= uf.merge(w, img[w]);
            if (merged) out.generators.push_back(img);
            return;
        }
        std::uint64_t mapped_nbrs = 0;
        for (int w = 0; w < v; ++w)
            if ((adj[v] >> w) & 1) mapped_nbrs |= std::uint64_t{1} << img[w];
        for (int u = 0; u < n; ++u) {
            if ((used >> u) & 1) continue;
            if (colors[u] != colors[v]) continue;
            if ((adj[u] & used) != mapped_nbrs) continue;
            img[v] = u;
            used |= std::uint64_t{1} << u;
            self(self, v + 1);
            used &= ~(std::uint64_t{1} << u);
            img[v] = -1;
        }
    };
    dfs(dfs, 0);

    std::vector<std::vector<int>> buckets(n);
    for (int v = 0; v < n; ++v) buckets[uf.find(v)].push_back(v);
    for (auto& b : buckets)
        if (!b.empty()) out.orbits.push_back(std::move(b));
    return out;
}

} // namespace tdp
