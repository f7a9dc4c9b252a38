#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "tdp/poly.hpp"

namespace tdp {

using Complex = std::complex<double>;

struct NumericRootOptions {
    double tol = 1e-9;  // relative residual target
    int max_iterations = 1000;
};

namespace detail {

inline Complex horner(const std::vector<Complex>& cs, Complex z) {
    Complex acc = 0;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

/// Durand-Kerner simultaneous iteration on a polynomial with no zero root.
inline std::vector<Complex> durand_kerner(const std::vector<BigInt>& coeffs,
                                          const NumericRootOptions& opt,
                                          const std::string& label) {
    const int deg = int(coeffs.size()) - 1;
    std::vector<Complex> cs(coeffs.size());
    double scale = 1.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        cs[i] = Complex(coeffs[i].convert_to<double>(), 0.0);
        scale = std::max(scale, std::abs(cs[i].real()));
    }

    double lead = std::abs(cs.back().real());
    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(cs[i].real()) / lead);
    radius += 1.0;

    // equally spaced start points, rotated by an irrational angle so no
    // start point coincides with a real root
    std::vector<Complex> z(deg);
    const double offset = std::numbers::sqrt2 / 2.0;
    for (int j = 0; j < deg; ++j) {
        double theta = 2.0 * std::numbers::pi * double(j) / double(deg) + offset;
        z[j] = std::polar(radius, theta);
    }

    for (int it = 0; it < opt.max_iterations; ++it) {
        double max_step = 0.0;
        for (int j = 0; j < deg; ++j) {
            Complex denom = cs.back();
            for (int k = 0; k < deg; ++k)
                if (k != j) denom *= z[j] - z[k];
            Complex step = horner(cs, z[j]) / denom;
            z[j] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-15 * radius) break;
    }

    for (int j = 0; j < deg; ++j)
        if (std::abs(horner(cs, z[j])) / scale >= opt.tol)
            throw numeric_error("root iteration did not converge for " + label);
    return z;
}

} // namespace detail

/// All complex roots of p (counted with multiplicity, degree of them in
/// total). Zero roots and other integer roots are split off exactly first;
/// Durand-Kerner handles the integer-free cofactor. Deterministic order:
/// exact roots ascending, then numeric roots by (re, im).
inline std::vector<Complex> numeric_roots(const IntPoly& p, NumericRootOptions opt = {}) {
    if (p.degree() < 1) throw precondition_error("numeric_roots: degree >= 1 required");
    std::vector<Complex> out;

    IntPoly rest = p;
    for (auto& [r, mult] : integer_roots(p)) {
        for (int i = 0; i < mult; ++i) {
            out.emplace_back(r.convert_to<double>(), 0.0);
            rest = *rest.divide_by_root(r);
        }
    }
    std::sort(out.begin(), out.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });

    if (rest.degree() >= 1) {
        auto z = detail::durand_kerner(rest.coefficients(), opt, p.to_string());
        std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        out.insert(out.end(), z.begin(), z.end());
    }
    return out;
}

/// Aggregated root report for one polynomial: exact integer roots, the
/// full numeric root list, the distinct-root set, and the exact
/// x^a (x+c)^b factorization when one exists.
struct RootSummary {
    std::vector<std::pair<BigInt, int>> integer_roots;
    std::vector<Complex> numeric_roots;
    std::vector<Complex> distinct_roots;
    std::optional<TwoRootForm> two_root_form;
};

inline RootSummary summarize_roots(const IntPoly& p, NumericRootOptions opt = {}) {
    RootSummary s;
    s.integer_roots = tdp::integer_roots(p);
    s.numeric_roots = tdp::numeric_roots(p, opt);
    s.two_root_form = match_two_root_form(p);

    const double cluster = std::max(1e-6, 10.0 * opt.tol);
    for (Complex z : s.numeric_roots) {
        bool fresh = true;
        for (Complex seen : s.distinct_roots)
            if (std::abs(z - seen) <= cluster) {
                fresh = false;
                break;
            }
        if (fresh) s.distinct_roots.push_back(z);
    }
    return s;
}

} // namespace tdp
