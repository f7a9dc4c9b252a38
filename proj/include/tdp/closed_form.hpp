#pragma once

#include <optional>

#include "tdp/families.hpp"
#include "tdp/poly.hpp"

namespace tdp {

namespace detail {

/// D_t(S_k) = x (x+1)^(k-1) - x: the center is forced, each leaf free,
/// minus the center-only set.
inline IntPoly star_polynomial(int k) {
    IntPoly x = IntPoly::x();
    IntPoly xp1 = IntPoly::from_coefficients({1, 1});
    return x * xp1.pow(k - 1) - x;
}

} // namespace detail

/// Closed-form D_t for the families the theory covers:
///   F(n,k)          -> (x (x+1)^(k-1) - x)^n          for k >= 3
///   F(k_1..k_n)     -> prod_i (x (x+1)^(k_i-1) - x)   for all k_i >= 3
///   H(3) over |H|=n -> x^(2n) (x+2)^n
///   S_k             -> x (x+1)^(k-1) - x              for k >= 2
/// Absent for families without a closed form; parameters outside the
/// theorem hypotheses raise hypothesis_error.
inline std::optional<IntPoly> closed_form(const GraphFamilySpec& spec) {
    if (const auto* f = std::get_if<FirecrackerSpec>(&spec)) {
        if (f->k < 3)
            throw hypothesis_error("firecracker closed form requires k >= 3 (links must be "
                                   "irrelevant edges)");
        return detail::star_polynomial(f->k).pow(f->n);
    }
    if (const auto* f = std::get_if<GeneralizedFirecrackerSpec>(&spec)) {
        IntPoly prod = IntPoly::one();
        for (int k : f->ks) {
            if (k < 3)
                throw hypothesis_error("generalized firecracker closed form requires every "
                                       "k_i >= 3");
            prod *= detail::star_polynomial(k);
        }
        return prod;
    }
    if (const auto* h = std::get_if<H3Spec>(&spec)) {
        int n = h->base.order();
        if (n < 1) throw hypothesis_error("H(3) closed form requires base order >= 1");
        return IntPoly::from_coefficients({2, 1}).pow(n).shifted(2 * n);
    }
    if (const auto* s = std::get_if<StarSpec>(&spec)) {
        if (s->n < 2) throw hypothesis_error("star closed form requires order >= 2");
        return detail::star_polynomial(s->n);
    }
    return std::nullopt;
}

} // namespace tdp
