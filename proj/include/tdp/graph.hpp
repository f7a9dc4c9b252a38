#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tdp/errors.hpp"
#include "tdp/vertex_set.hpp"

namespace tdp {

/// Undirected edge with endpoints normalized to u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw parameter_error("edge endpoints must differ");
    }

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Adjacency is one VertexSet
/// per vertex; symmetry and irreflexivity are maintained by construction.
/// Graphs are treated as immutable once built, so every query is pure and
/// safe to run concurrently.
class Graph {
public:
    Graph() = default;

    explicit Graph(int order) : adj_(order, VertexSet(order)) {
        if (order < 0) throw parameter_error("graph order must be nonnegative");
    }

    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
        Graph g(order);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const noexcept { return int(adj_.size()); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw parameter_error("self-loops are not allowed");
        adj_[u].add(v);
        adj_[v].add(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].contains(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    int min_degree() const {
        int d = order() == 0 ? 0 : degree(0);
        for (int v = 1; v < order(); ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
        return d;
    }

    bool is_regular(int k) const {
        for (int v = 0; v < order(); ++v)
            if (degree(v) != k) return false;
        return true;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (int v = 0; v < order(); ++v) twice += std::size_t(degree(v));
        return twice / 2;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[u].to_vector())
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool has_isolated_vertex() const {
        for (int v = 0; v < order(); ++v)
            if (adj_[v].empty()) return true;
        return false;
    }

    /// N(S) (open), or N[S] = N(S) | S (closed).
    VertexSet neighborhood(const VertexSet& s, bool closed) const {
        VertexSet out(order());
        for (int v : s.to_vector()) out |= adj_[v];
        if (closed) out |= s;
        return out;
    }

    VertexSet closed_neighborhood(int v) const {
        VertexSet out = neighbors(v);
        out.add(v);
        return out;
    }

    /// Adjacency as one 64-bit mask per vertex. Only valid for order <= 64;
    /// this is the hot-path representation for subset enumeration.
    std::vector<std::uint64_t> adjacency_masks() const {
        if (order() > 64) throw size_error("bit-mask adjacency requires order <= 64");
        std::vector<std::uint64_t> masks(order(), 0);
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[u].to_vector()) masks[u] |= std::uint64_t{1} << v;
        return masks;
    }

    Graph delete_edge(Edge e) const {
        if (!has_edge(e.u, e.v)) throw not_found_error("no such edge to delete");
        Graph g = *this;
        g.adj_[e.u].remove(e.v);
        g.adj_[e.v].remove(e.u);
        return g;
    }

    /// Deletes v and renumbers the remaining vertices order-preservingly.
    /// old_to_new[u] gives u's new index, or -1 for the deleted vertex.
    Graph delete_vertex(int v, std::vector<int>* old_to_new = nullptr) const {
        check_vertex(v);
        std::vector<int> map(order(), -1);
        int next = 0;
        for (int u = 0; u < order(); ++u)
            if (u != v) map[u] = next++;
        Graph g(order() - 1);
        for (int u = 0; u < order(); ++u) {
            if (u == v) continue;
            for (int w : adj_[u].to_vector())
                if (w != v && u < w) g.add_edge(map[u], map[w]);
        }
        if (old_to_new) *old_to_new = std::move(map);
        return g;
    }

    /// G (.) v: removes every edge joining two vertices of N(v). With
    /// drop_v this is G (*) v, which additionally deletes v itself.
    Graph odot(int v, bool drop_v = false, std::vector<int>* old_to_new = nullptr) const {
        check_vertex(v);
        Graph g = *this;
        auto nv = adj_[v].to_vector();
        for (std::size_t i = 0; i < nv.size(); ++i)
            for (std::size_t j = i + 1; j < nv.size(); ++j) {
                g.adj_[nv[i]].remove(nv[j]);
                g.adj_[nv[j]].remove(nv[i]);
            }
        if (drop_v) return g.delete_vertex(v, old_to_new);
        if (old_to_new) {
            old_to_new->resize(order());
            for (int u = 0; u < order(); ++u) (*old_to_new)[u] = u;
        }
        return g;
    }

    /// Deletes every vertex of the set at once; same renumbering contract
    /// as delete_vertex.
    Graph delete_vertices(const VertexSet& drop, std::vector<int>* old_to_new = nullptr) const {
        std::vector<int> map(order(), -1);
        int next = 0;
        for (int u = 0; u < order(); ++u)
            if (!drop.contains(u)) map[u] = next++;
        Graph g(next);
        for (int u = 0; u < order(); ++u) {
            if (drop.contains(u)) continue;
            for (int w : adj_[u].to_vector())
                if (!drop.contains(w) && u < w) g.add_edge(map[u], map[w]);
        }
        if (old_to_new) *old_to_new = std::move(map);
        return g;
    }

    /// leaves = degree-1 vertices; supports = vertices adjacent to a leaf.
    std::pair<VertexSet, VertexSet> supports_and_leaves() const {
        VertexSet leaves(order()), supports(order());
        for (int v = 0; v < order(); ++v)
            if (degree(v) == 1) {
                leaves.add(v);
                supports.add(adj_[v].first());
            }
        return {leaves, supports};
    }

    VertexSet component_of(int start) const {
        check_vertex(start);
        VertexSet seen = VertexSet::single(order(), start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v].to_vector())
                if (!seen.contains(w)) {
                    seen.add(w);
                    stack.push_back(w);
                }
        }
        return seen;
    }

    std::vector<VertexSet> components() const {
        std::vector<VertexSet> out;
        VertexSet seen(order());
        for (int v = 0; v < order(); ++v) {
            if (seen.contains(v)) continue;
            out.push_back(component_of(v));
            seen |= out.back();
        }
        return out;
    }

    bool is_connected() const {
        if (order() == 0) return true;
        return component_of(0).count() == order();
    }

    /// Relabels vertices: vertex v becomes perm[v].
    Graph relabel(const std::vector<int>& perm) const {
        Graph g(order());
        for (Edge e : edges()) g.add_edge(perm[e.u], perm[e.v]);
        return g;
    }

    /// Disjoint union; the right graph's vertices are shifted by order().
    Graph disjoint_union(const Graph& h) const {
        Graph g(order() + h.order());
        for (Edge e : edges()) g.add_edge(e.u, e.v);
        for (Edge e : h.edges()) g.add_edge(order() + e.u, order() + e.v);
        return g;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order())
            throw not_found_error("vertex " + std::to_string(v) + " out of range for order " +
                                  std::to_string(order()));
    }

    std::vector<VertexSet> adj_;
};

} // namespace tdp
