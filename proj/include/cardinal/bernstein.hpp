#pragma once

// Sharp L2 Bernstein inequality for cardinal splines with knot spacing D:
//
//     ||s^(k)||_2 <= (pi/D)^k sqrt(K_{2(m-k)+1} / K_{2m+1}) ||s||_2.

#include "cardinal/bspline.hpp"
#include "cardinal/favard.hpp"
#include "cardinal/norms.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace cardinal {

inline constexpr double favard_rtol = 1e-15;

struct InequalityReport {
    int degree = 0;
    int order = 0;
    double spacing = 1;
    double ratio = 0;    // ||s^(k)|| / ||s||
    double constant = 0; // sharp constant
    double margin = 0;   // constant - ratio
    bool satisfied = false;
};

/// Floating slack used to decide `satisfied`.
inline double report_tolerance(double constant) noexcept { return 1e-10 * constant; }

namespace detail {

inline void check_order(int m, int k, double spacing)
{
    if (m < 0) {
        throw std::invalid_argument("degree must be non-negative");
    }
    if (k < 0) {
        throw std::invalid_argument("derivative order must be non-negative");
    }
    if (k > m) {
        throw std::invalid_argument("derivative order exceeds degree");
    }
    if (!(spacing > 0) || !std::isfinite(spacing)) {
        throw std::invalid_argument("knot spacing must be positive and finite");
    }
}

} // namespace detail

/// (pi/D)^k sqrt(K_{2(m-k)+1} / K_{2m+1}).
inline double sharp_constant(int m, int k, double spacing, double rtol = favard_rtol)
{
    detail::check_order(m, k, spacing);
    if (k == 0) {
        return 1.0;
    }
    const double lower = favard(2 * (m - k) + 1, rtol).value;
    const double upper = favard(2 * m + 1, rtol).value;
    return std::pow(std::numbers::pi / spacing, k) * std::sqrt(lower / upper);
}

/// Product of one-derivative constants down the chain m, m-1, ..., m-k+1.
inline double sharp_constant_telescoped(int m, int k, double spacing, double rtol = favard_rtol)
{
    detail::check_order(m, k, spacing);
    double product = 1.0;
    for (int j = 0; j < k; ++j) {
        product *= sharp_constant(m - j, 1, spacing, rtol);
    }
    return product;
}

inline InequalityReport verify_inequality(const CardinalSpline& s, int k)
{
    detail::check_order(s.degree(), k, s.spacing());
    const double base = l2_norm_sq(s);
    if (s.is_zero() || !(base > 0)) {
        throw std::invalid_argument("verify_inequality: norm is zero");
    }
    InequalityReport report;
    report.degree = s.degree();
    report.order = k;
    report.spacing = s.spacing();
    report.ratio = k == 0 ? 1.0 : std::sqrt(l2_norm_sq(derivative_coeffs(s, k)) / base);
    report.constant = sharp_constant(s.degree(), k, s.spacing());
    report.margin = report.constant - report.ratio;
    report.satisfied = report.margin >= -report_tolerance(report.constant);
    return report;
}

/// c_g = (-1)^g, g = 0..n. |sum c_g e^{-igw}|^2 is (n+1) times the Fejer kernel centered at pi.
inline std::vector<double> fejer_extremal_coeffs(int n)
{
    if (n < 0) {
        throw std::invalid_argument("fejer_extremal_coeffs: n must be non-negative");
    }
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t g = 0; g < c.size(); ++g) {
        c[g] = g % 2 == 0 ? 1.0 : -1.0;
    }
    return c;
}

/// Normalized Fejer kernel of order n (unit mean over a period).
inline double fejer_kernel(int n, double omega)
{
    const double half = std::sin(omega / 2);
    const double count = n + 1.0;
    if (std::abs(half) < 1e-300) {
        return count;
    }
    const double num = std::sin(count * omega / 2);
    return num * num / (count * half * half);
}

/// ||s'|| / ||s|| for the unit-spacing spline with Fejer-extremal coefficients.
inline double extremal_ratio(int m, int n)
{
    if (m < 1) {
        throw std::invalid_argument("extremal_ratio: degree must be at least 1");
    }
    const CardinalSpline s(m, 1.0, fejer_extremal_coeffs(n));
    return verify_inequality(s, 1).ratio;
}

/**
 * Deterministic random spline: coefficients uniform in [-1, 1).
 *
 * Generator: std::mt19937_64 seeded with `seed`; each draw x maps to
 * 2 * ((x >> 11) * 2^-53) - 1. Both steps are fully specified, so the
 * output is identical across platforms and standard libraries.
 */
inline CardinalSpline random_spline(int m, int count, double spacing, std::uint64_t seed)
{
    if (count < 1) {
        throw std::invalid_argument("random_spline: count must be at least 1");
    }
    std::mt19937_64 engine(seed);
    std::vector<double> c(static_cast<std::size_t>(count));
    for (double& v : c) {
        const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        v = 2 * unit - 1;
    }
    return {m, spacing, std::move(c)};
}

} // namespace cardinal
