#pragma once

#include "tdp/canonical.hpp"
#include "tdp/count.hpp"
#include "tdp/graph.hpp"
#include "tdp/poly.hpp"

namespace tdp {

/// d_t(G,i) = C(n,i) for i > n-k in a k-regular graph: removing fewer
/// than k vertices leaves every closed neighborhood inhabited.
inline BigInt regular_tail(int n, int k, int i) {
    if (i <= n - k)
        throw precondition_error("regular_tail requires i > n - k");
    return binomial(n, i);
}

/// D_t of a vertex-transitive graph via d_t(G,i) = (n/i) d_t^v(G,i) for a
/// single fixed v, with the regular tail C(n,i) filled in for i > n-k.
/// The division must be exact; a remainder signals a bug, not bad input.
inline IntPoly polynomial_vertex_transitive(const Graph& g, const EnumerationOptions& opt = {}) {
    const int n = g.order();
    if (n == 0) return IntPoly::one();
    if (!automorphism_orbits(g).is_vertex_transitive())
        throw precondition_error("polynomial_vertex_transitive: graph is not vertex-transitive");

    const int k = g.degree(0); // vertex-transitive => regular
    CountVector rooted = count_containing(g, 0, opt);
    std::vector<BigInt> counts(std::size_t(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        if (i > n - k) {
            counts[std::size_t(i)] = regular_tail(n, k, i);
            continue;
        }
        BigInt scaled = BigInt(n) * rooted.counts[std::size_t(i)];
        if (scaled % i != 0)
            throw internal_consistency_error(
                "vertex-transitive count lemma produced a non-integer d_t(G," +
                std::to_string(i) + ")");
        counts[std::size_t(i)] = scaled / i;
    }
    return IntPoly::from_coefficients(std::move(counts));
}

} // namespace tdp
