#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "tdp/graph.hpp"

namespace tdp {

namespace detail {

/// Edmonds-Karp on a dense capacity matrix; small inputs only.
inline int max_flow(std::vector<std::vector<int>>& cap, int source, int sink) {
    const int n = int(cap.size());
    int flow = 0;
    std::vector<int> pred(n);
    for (;;) {
        std::fill(pred.begin(), pred.end(), -1);
        pred[source] = source;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && pred[sink] == -1) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (pred[v] == -1 && cap[u][v] > 0) {
                    pred[v] = u;
                    q.push(v);
                }
        }
        if (pred[sink] == -1) return flow;
        int push = std::numeric_limits<int>::max();
        for (int v = sink; v != source; v = pred[v]) push = std::min(push, cap[pred[v]][v]);
        for (int v = sink; v != source; v = pred[v]) {
            cap[pred[v]][v] -= push;
            cap[v][pred[v]] += push;
        }
        flow += push;
    }
}

/// Minimum number of internally disjoint s-t paths (s,t non-adjacent),
/// via the vertex-split flow network.
inline int local_vertex_connectivity(const Graph& g, int s, int t) {
    const int n = g.order();
    const int big = n + 1;
    // node 2v = v_in, 2v+1 = v_out
    std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? big : 1;
    for (Edge e : g.edges()) {
        cap[2 * e.u + 1][2 * e.v] = big;
        cap[2 * e.v + 1][2 * e.u] = big;
    }
    return max_flow(cap, 2 * s + 1, 2 * t);
}

} // namespace detail

/// Vertex connectivity kappa(G). Complete graphs return n-1 by convention;
/// disconnected input returns 0.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw precondition_error("vertex connectivity needs order >= 2");
    if (!g.is_connected()) return 0;
    if (std::size_t(n) * (n - 1) / 2 == g.edge_count()) return n - 1;
    int best = n;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t))
                best = std::min(best, detail::local_vertex_connectivity(g, s, t));
    return best;
}

} // namespace tdp
