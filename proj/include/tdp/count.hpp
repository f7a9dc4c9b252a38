#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "tdp/graph.hpp"
#include "tdp/poly.hpp"

namespace tdp {

/// Exact per-cardinality counts d_t(G,i), i = 0..n, with the derived
/// total domination number.
struct CountVector {
    std::vector<BigInt> counts;
    std::optional<int> gamma_t;

    IntPoly polynomial() const { return IntPoly::from_coefficients(counts); }
};

struct EnumerationOptions {
    int max_n = 26; // largest order enumerated exhaustively (2^n subsets)
    int workers = 1;
};

/// N(D) = V: every vertex, including members of D, has a neighbor in D.
inline bool is_total_dominating(const Graph& g, const VertexSet& d) {
    return g.neighborhood(d, /*closed=*/false) == VertexSet::full(g.order());
}

namespace detail {

/// Counts subsets S (forced_mask included) whose open neighborhood union
/// covers everything, bucketed by |S|. DFS over vertex indices; a branch
/// dies as soon as the not-yet-chosen vertices cannot cover the rest.
struct SubsetCounter {
    int n = 0;
    std::uint64_t full = 0;
    std::uint64_t forced = 0;
    std::vector<std::uint64_t> adj;
    std::vector<std::uint64_t> suffix_cover;

    SubsetCounter(const Graph& g, std::uint64_t forced_mask)
        : n(g.order()), forced(forced_mask), adj(g.adjacency_masks()) {
        full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        suffix_cover.assign(std::size_t(n) + 1, 0);
        for (int v = n - 1; v >= 0; --v) suffix_cover[v] = suffix_cover[v + 1] | adj[v];
    }

    void dfs(int depth, std::uint64_t covered, int chosen,
             std::vector<std::uint64_t>& out) const {
        if ((covered | suffix_cover[depth]) != full) return;
        if (depth == n) {
            ++out[std::size_t(chosen)];
            return;
        }
        dfs(depth + 1, covered | adj[depth], chosen + 1, out);
        if (!((forced >> depth) & 1)) dfs(depth + 1, covered, chosen, out);
    }
};

inline std::vector<std::uint64_t> count_dominating_subsets(const Graph& g,
                                                           std::uint64_t forced_mask,
                                                           const EnumerationOptions& opt) {
    const int n = g.order();
    SubsetCounter counter(g, forced_mask);
    std::vector<std::uint64_t> totals(std::size_t(n) + 1, 0);

    int workers = std::max(1, opt.workers);
    if (workers == 1 || n < 8) {
        counter.dfs(0, 0, 0, totals);
        return totals;
    }

    // split the subset space on the first few vertices; each prefix is an
    // independent subtree, and exact addition makes the merge order moot
    int prefix_bits = std::min(n, std::max(3, int(std::bit_width(unsigned(workers))) + 2));
    std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;
    std::atomic<std::uint64_t> next{0};
    std::vector<std::vector<std::uint64_t>> partial(
        std::size_t(workers), std::vector<std::uint64_t>(std::size_t(n) + 1, 0));

    auto run = [&](int w) {
        for (;;) {
            std::uint64_t pre = next.fetch_add(1);
            if (pre >= prefixes) return;
            // forced vertices inside the prefix range must be present
            if ((~pre & forced_mask & (prefixes - 1)) != 0) continue;
            std::uint64_t covered = 0;
            int chosen = 0;
            for (int v = 0; v < prefix_bits; ++v)
                if ((pre >> v) & 1) {
                    covered |= counter.adj[v];
                    ++chosen;
                }
            counter.dfs(prefix_bits, covered, chosen, partial[std::size_t(w)]);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
    for (auto& part : partial)
        for (std::size_t i = 0; i < totals.size(); ++i) totals[i] += part[i];
    return totals;
}

inline CountVector to_count_vector(std::vector<std::uint64_t> raw) {
    CountVector cv;
    cv.counts.reserve(raw.size());
    for (auto c : raw) cv.counts.emplace_back(c);
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (raw[i] > 0) {
            cv.gamma_t = int(i);
            break;
        }
    return cv;
}

inline void check_enumerable(const Graph& g, const EnumerationOptions& opt) {
    if (g.order() > opt.max_n || g.order() > 64)
        throw size_error("order " + std::to_string(g.order()) + " exceeds enumeration limit " +
                         std::to_string(std::min(opt.max_n, 64)) +
                         "; use the recurrence pipeline");
}

} // namespace detail

/// d_t(G,i) for every i, by exhaustive subset enumeration.
inline CountVector count_all(const Graph& g, const EnumerationOptions& opt = {}) {
    detail::check_enumerable(g, opt);
    if (g.order() == 0) return {{BigInt(1)}, 0};
    return detail::to_count_vector(detail::count_dominating_subsets(g, 0, opt));
}

/// d_t^v(G,i): counts restricted to sets containing v.
inline CountVector count_containing(const Graph& g, int v, const EnumerationOptions& opt = {}) {
    detail::check_enumerable(g, opt);
    if (v < 0 || v >= g.order()) throw not_found_error("count_containing: no such vertex");
    return detail::to_count_vector(
        detail::count_dominating_subsets(g, std::uint64_t{1} << v, opt));
}

inline IntPoly total_domination_polynomial(const Graph& g, const EnumerationOptions& opt = {}) {
    return count_all(g, opt).polynomial();
}

/// Minimum total dominating set size, by increasing-size search.
inline int gamma_t(const Graph& g) {
    const int n = g.order();
    if (n == 0 || g.has_isolated_vertex())
        throw precondition_error("gamma_t undefined: graph has an isolated vertex");
    if (n > 64) throw size_error("gamma_t search supports order <= 64");
    auto adj = g.adjacency_masks();
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> suffix(std::size_t(n) + 1, 0);
    for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] | adj[v];

    auto exists = [&](auto&& self, int depth, std::uint64_t covered, int left) -> bool {
        if (covered == full && left == 0) return true;
        if (depth == n || left == 0) return false;
        if (n - depth < left) return false;
        if ((covered | suffix[depth]) != full) return false;
        if (self(self, depth + 1, covered | adj[depth], left - 1)) return true;
        return self(self, depth + 1, covered, left);
    };
    for (int s = 1; s <= n; ++s)
        if (exists(exists, 0, 0, s)) return s;
    throw internal_consistency_error("gamma_t: no total dominating set found");
}

} // namespace tdp
