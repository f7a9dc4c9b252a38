#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tdp/canonical.hpp"
#include "tdp/graph.hpp"

namespace tdp {

namespace detail {

struct RegularGen {
    int n, k;
    std::vector<std::uint64_t> adj;
    std::vector<int> deg;
    std::map<std::string, Graph> found; // canonical form -> representative

    RegularGen(int n_, int k_) : n(n_), k(k_), adj(n_, 0), deg(n_, 0) {}

    bool feasible() const {
        // every deficient vertex needs enough deficient non-neighbors left
        std::uint64_t deficient = 0;
        for (int v = 0; v < n; ++v)
            if (deg[v] < k) deficient |= std::uint64_t{1} << v;
        for (int v = 0; v < n; ++v) {
            if (deg[v] == k) continue;
            std::uint64_t partners = deficient & ~adj[v] & ~(std::uint64_t{1} << v);
            if (std::popcount(partners) < k - deg[v]) return false;
        }
        return true;
    }

    void record() {
        Graph g(n);
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if ((adj[v] >> w) & 1) g.add_edge(v, w);
        found.emplace(canonical_form(g), std::move(g));
    }

    void add_edge(int u, int w) {
        adj[u] |= std::uint64_t{1} << w;
        adj[w] |= std::uint64_t{1} << u;
        ++deg[u];
        ++deg[w];
    }

    void remove_edge(int u, int w) {
        adj[u] &= ~(std::uint64_t{1} << w);
        adj[w] &= ~(std::uint64_t{1} << u);
        --deg[u];
        --deg[w];
    }

    /// Completes the smallest deficient vertex by choosing its remaining
    /// neighbors among larger-indexed deficient vertices, so each labeled
    /// graph is produced exactly once.
    void extend() {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] < k) {
                u = v;
                break;
            }
        if (u == -1) {
            record();
            return;
        }
        std::vector<int> cands;
        for (int w = u + 1; w < n; ++w)
            if (deg[w] < k && !((adj[u] >> w) & 1)) cands.push_back(w);
        choose(u, k - deg[u], cands, 0);
    }

    void choose(int u, int need, const std::vector<int>& cands, std::size_t from) {
        if (need == 0) {
            if (feasible()) extend();
            return;
        }
        if (cands.size() < from + std::size_t(need)) return;
        for (std::size_t i = from; i + std::size_t(need) <= cands.size(); ++i) {
            int w = cands[i];
            if (deg[w] == k) continue;
            add_edge(u, w);
            choose(u, need - 1, cands, i + 1);
            remove_edge(u, w);
        }
    }
};

} // namespace detail

/// All pairwise non-isomorphic k-regular graphs of order n, sorted by
/// canonical form. Infeasible degree sequences yield the empty list.
/// WLOG vertex 0's neighborhood is fixed to {1..k}; every isomorphism
/// class has such a labeling.
inline std::vector<Graph> generate_regular(int n, int k, bool connected_only = false) {
    if (n <= 0 || k < 0 || k >= n || (n * k) % 2 != 0) return {};
    detail::RegularGen gen(n, k);
    if (k == 0) {
        gen.record();
    } else {
        for (int w = 1; w <= k; ++w) gen.add_edge(0, w);
        if (gen.feasible()) gen.extend();
    }
    std::vector<Graph> out;
    for (auto& [form, g] : gen.found)
        if (!connected_only || g.is_connected()) out.push_back(std::move(g));
    return out;
}

/// All graphs of order n up to isomorphism, by vertex augmentation: every
/// n-vertex graph arises from an (n-1)-vertex graph plus one new vertex
/// joined to some subset. Sorted by canonical form.
inline std::vector<Graph> generate_all(int n, bool connected_only = false) {
    if (n <= 0) return {};
    if (n > 10) throw size_error("exhaustive graph generation capped at order 10");
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Graph> next;
        for (const Graph& g : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                Graph h(m);
                for (Edge e : g.edges()) h.add_edge(e.u, e.v);
                for (int v = 0; v < m - 1; ++v)
                    if ((mask >> v) & 1) h.add_edge(v, m - 1);
                next.emplace(canonical_form(h), std::move(h));
            }
        }
        level.clear();
        for (auto& [form, g] : next) level.push_back(std::move(g));
    }
    if (connected_only)
        std::erase_if(level, [](const Graph& g) { return !g.is_connected(); });
    return level;
}

} // namespace tdp
