#pragma once

// Periodized squared symbol  P_m(w) = sum_l |N_m^(w + 2 pi l)|^2  by three
// routes, and the one-derivative ratio
//     L(w) = |1 - e^{-iw}|^2 P_{m-1}(w) / P_m(w).

#include "cardinal/bspline.hpp"
#include "cardinal/detail/euler_maclaurin.hpp"
#include "cardinal/detail/summation.hpp"
#include "cardinal/euler_frobenius.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace cardinal {

inline constexpr double two_pi = 2 * std::numbers::pi;
// 2 pi - two_pi, the rounding residue of the double constant.
inline constexpr double two_pi_lo = 2.4492935982947064e-16;

/// Reduce to [0, 2 pi).
inline double canonical_angle(double omega)
{
    double r = std::fmod(omega, two_pi);
    if (r < 0) {
        r += two_pi;
    }
    if (r >= two_pi) {
        r = 0;
    }
    return r;
}

enum class SymbolMethod { lattice, fourier, ef_product };

inline std::string_view to_string(SymbolMethod method)
{
    switch (method) {
    case SymbolMethod::lattice: return "lattice";
    case SymbolMethod::fourier: return "fourier";
    case SymbolMethod::ef_product: return "ef-product";
    }
    return "unknown";
}

struct SymbolEval {
    int degree = 0;
    double omega = 0;
    double value = 0;
    SymbolMethod method = SymbolMethod::fourier;
    double tail_bound = 0;
};

/// a_0 + 2 sum_{j=1}^m a_j cos(j w), a = gram_autocorrelation(m).
class FourierSymbol {
public:
    explicit FourierSymbol(int degree) : degree_(degree), autocorrelation_(gram_autocorrelation(degree)) {}

    [[nodiscard]] int degree() const noexcept { return degree_; }

    [[nodiscard]] double operator()(double omega) const
    {
        const double w = canonical_angle(omega);
        double value = autocorrelation_[0];
        for (std::size_t j = 1; j < autocorrelation_.size(); ++j) {
            value += 2 * autocorrelation_[j] * std::cos(static_cast<double>(j) * w);
        }
        return value;
    }

private:
    int degree_;
    std::vector<double> autocorrelation_;
};

inline double symbol_fourier(int degree, double omega) { return FourierSymbol(degree)(omega); }

/**
 * Closed form
 *     P_m(w) = (2 sin(w/2))^{2m+2} sum_l |w + 2 pi l|^{-(2m+2)}
 *
 * with the lattice sum split into |l| <= L, summed directly, and two tails
 * handled by Euler-Maclaurin with a rigorous remainder bound. L grows until
 * the bound is at most rtol times the value. w = 0 returns the limit 1.
 */
inline SymbolEval symbol_lattice(int degree, double omega, double rtol)
{
    if (degree < 0) {
        throw std::invalid_argument("symbol_lattice: degree must be non-negative");
    }
    if (!(rtol > 0)) {
        throw std::invalid_argument("symbol_lattice: rtol must be positive");
    }
    const double w = canonical_angle(omega);
    SymbolEval out{degree, w, 1.0, SymbolMethod::lattice, 0.0};
    if (w == 0) {
        return out;
    }
    const double p = 2.0 * degree + 2.0;
    const double chord = 2 * std::sin(w / 2);
    const double chord_power = std::pow(chord, p);

    for (long half_width = 4;; half_width *= 2) {
        detail::CompensatedSum<double> direct;
        // Smallest terms first.
        for (long l = half_width; l >= 1; --l) {
            const double shift = two_pi * static_cast<double>(l);
            const double shift_lo = two_pi_lo * static_cast<double>(l);
            direct += std::pow(chord / ((w + shift) + shift_lo), p);
            // Near w = 2 pi the difference cancels; the low part of 2 pi keeps it accurate.
            direct += std::pow(chord / ((shift - w) + shift_lo), p);
        }
        direct += std::pow(chord / w, p);
        const double partial = direct.value();

        const double target = 0.25 * rtol * partial / chord_power;
        const auto upper = detail::power_tail(w, two_pi, p, half_width + 1, target);
        const auto lower = detail::power_tail(-w, two_pi, p, half_width + 1, target);
        const double bound = chord_power * (upper.bound + lower.bound);
        const double value = partial + chord_power * (upper.value + lower.value);
        if (bound <= rtol * value || half_width > (1L << 24)) {
            out.value = value;
            out.tail_bound = bound;
            return out;
        }
    }
}

/// L(w) for degree m >= 1, evaluated through the finite Fourier route.
class RatioL {
public:
    explicit RatioL(int degree) : numerator_(checked(degree) - 1), denominator_(degree) {}

    [[nodiscard]] int degree() const noexcept { return denominator_.degree(); }

    [[nodiscard]] double operator()(double omega) const
    {
        const double w = canonical_angle(omega);
        const double half_chord = std::sin(w / 2);
        return 4 * half_chord * half_chord * numerator_(w) / denominator_(w);
    }

private:
    static int checked(int degree)
    {
        if (degree < 1) {
            throw std::invalid_argument("ratio_L: degree must be at least 1");
        }
        return degree;
    }

    FourierSymbol numerator_;
    FourierSymbol denominator_;
};

inline double ratio_L(int degree, double omega) { return RatioL(degree)(omega); }

struct RatioMaximum {
    double omega = 0;
    double value = 0;
};

/// i-th point of the uniform grid of `points` nodes over [0, 2 pi); exact pi at i = points/2.
inline double uniform_angle(long i, long points)
{
    return std::numbers::pi * (2.0 * static_cast<double>(i) / static_cast<double>(points));
}

/**
 * Maximize L over [0, 2 pi): uniform grid scan (ties to the smaller w),
 * then golden-section refinement within one grid step. The refined point
 * replaces the grid point only if it is better by more than rounding.
 */
inline RatioMaximum argmax_ratio(int degree, long grid_points)
{
    if (grid_points < 16) {
        throw std::invalid_argument("argmax_ratio: need at least 16 grid points");
    }
    const RatioL L(degree);
    RatioMaximum best{0.0, L(0.0)};
    for (long i = 1; i < grid_points; ++i) {
        const double w = uniform_angle(i, grid_points);
        const double v = L(w);
        if (v > best.value) {
            best = {w, v};
        }
    }

    const double step = two_pi / static_cast<double>(grid_points);
    double a = best.omega - step;
    double b = best.omega + step;
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = L(x1);
    double f2 = L(x2);
    while (b - a > 1e-12) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = L(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = L(x1);
        }
    }
    const double refined = canonical_angle(0.5 * (a + b));
    const double refined_value = L(refined);
    if (refined_value > best.value * (1 + 4 * std::numeric_limits<double>::epsilon())) {
        best = {refined, refined_value};
    }
    return best;
}

/**
 * ||s||^2 through the frequency domain:
 *
 *     spacing * (1/2pi) int_0^{2pi} |sum_j c_j e^{-i j w}|^2 P_m(w) dw.
 *
 * The integrand is a trigonometric polynomial of degree n-1+m, so the
 * periodic trapezoidal rule with more than that many nodes is exact.
 */
inline double l2_norm_sq_parseval(const CardinalSpline& s)
{
    if (s.size() == 0) {
        return 0.0;
    }
    const FourierSymbol symbol(s.degree());
    const auto c = s.coeffs();
    const long degree = static_cast<long>(c.size()) - 1 + s.degree();
    const long nodes = 2 * degree + 16;
    detail::CompensatedSum<double> total;
    for (long q = 0; q < nodes; ++q) {
        const double w = uniform_angle(q, nodes);
        std::complex<double> mask = 0;
        for (std::size_t j = 0; j < c.size(); ++j) {
            mask += c[j] * std::polar(1.0, -static_cast<double>(j) * w);
        }
        total += std::norm(mask) * symbol(w);
    }
    return s.spacing() * total.value() / static_cast<double>(nodes);
}

} // namespace cardinal
