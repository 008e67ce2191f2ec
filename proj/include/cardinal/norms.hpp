#pragma once

#include "cardinal/bspline.hpp"
#include "cardinal/detail/gauss_legendre.hpp"
#include "cardinal/detail/summation.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cardinal {

/// k-th derivative of a degree-m spline, itself a degree m-k spline on the same knots.
struct DerivativeSpline {
    CardinalSpline spline;
    int order = 0;
    int base_degree = 0;
};

namespace detail {

// One application of d/dx: coefficients c_j - c_{j-1} (zero padded), scaled by 1/spacing.
inline CardinalSpline differentiate_once(const CardinalSpline& s)
{
    const auto c = s.coeffs();
    std::vector<double> d(c.size() + 1, 0.0);
    for (std::size_t j = 0; j <= c.size(); ++j) {
        const double cur = j < c.size() ? c[j] : 0.0;
        const double prev = j >= 1 ? c[j - 1] : 0.0;
        d[j] = (cur - prev) / s.spacing();
    }
    if (c.empty()) {
        d.clear();
    }
    return {s.degree() - 1, s.spacing(), std::move(d), s.offset()};
}

} // namespace detail

/// Uses N_m' = N_{m-1}(.) - N_{m-1}(. - 1) k times.
inline DerivativeSpline derivative_coeffs(const CardinalSpline& s, int k)
{
    if (k < 0) {
        throw std::invalid_argument("derivative_coeffs: derivative order must be non-negative");
    }
    if (k > s.degree()) {
        throw std::invalid_argument("derivative_coeffs: derivative order exceeds degree");
    }
    CardinalSpline result = s;
    for (int i = 0; i < k; ++i) {
        result = detail::differentiate_once(result);
    }
    return {std::move(result), k, s.degree()};
}

/**
 * Squared L2 norm as the banded quadratic form
 *
 *     ||s||^2 = spacing * sum_{i,j} c_i c_j a_{|i-j|},
 *
 * with a = gram_autocorrelation(m). Exact up to rounding.
 */
inline double l2_norm_sq(const CardinalSpline& s)
{
    const auto c = s.coeffs();
    if (c.empty()) {
        return 0.0;
    }
    const auto a = gram_autocorrelation(s.degree());
    const std::size_t n = c.size();
    const std::size_t band = std::min(a.size(), n);

    detail::CompensatedSum<double> total;
    for (std::size_t lag = 0; lag < band; ++lag) {
        detail::CompensatedSum<double> lagged;
        for (std::size_t i = 0; i + lag < n; ++i) {
            lagged += c[i] * c[i + lag];
        }
        total += (lag == 0 ? 1.0 : 2.0) * a[lag] * lagged.value();
    }
    // Clamp round-off; the form is positive semi-definite.
    return std::max(0.0, s.spacing() * total.value());
}

inline double l2_norm_sq(const DerivativeSpline& d) { return l2_norm_sq(d.spline); }

/// Independent oracle: Gauss-Legendre with m+1 nodes on every knot interval of the support.
inline double l2_norm_sq_quadrature(const CardinalSpline& s)
{
    if (s.size() == 0) {
        return 0.0;
    }
    const auto rule = detail::gauss_legendre<double>(s.degree() + 1);
    const auto [first, last] = s.knot_range();
    const double h = s.spacing();
    detail::CompensatedSum<double> total;
    for (long cell = first; cell < last; ++cell) {
        const double left = h * static_cast<double>(cell);
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const double x = left + 0.5 * h * (rule.nodes[q] + 1.0);
            const double v = spline_eval(s, x);
            total += 0.5 * h * rule.weights[q] * v * v;
        }
    }
    return total.value();
}

inline double l2_norm_sq_quadrature(const DerivativeSpline& d) { return l2_norm_sq_quadrature(d.spline); }

} // namespace cardinal
