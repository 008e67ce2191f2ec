#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cardinal::detail {

/// Estimate of an infinite tail together with a rigorous bound on its error.
struct TailEstimate {
    double value = 0;
    double bound = 0;
};

// B_2, B_4, ..., B_24
inline constexpr std::array<double, 12> even_bernoulli{
    1.0 / 6,           -1.0 / 30,         1.0 / 42,          -1.0 / 30,
    5.0 / 66,          -691.0 / 2730,     7.0 / 6,           -3617.0 / 510,
    43867.0 / 798,     -174611.0 / 330,   854513.0 / 138,    -236364091.0 / 2730};

/**
 * Tail of a shifted power series,
 *
 *     T = sum_{l >= first} (a + b l)^(-s),     a + b*first > 0, b > 0, s > 1,
 *
 * by Euler-Maclaurin summation anchored at `first`. The summand is completely
 * monotone, so the remainder after q correction terms obeys
 *
 *     |R_q| <= 2 zeta(2q) / (2 pi)^(2q) * |f^(2q-1)(first)|.
 *
 * Corrections are added until the bound drops below `target` or stops
 * improving (the expansion is asymptotic).
 */
inline TailEstimate power_tail(double a, double b, double s, long first, double target)
{
    const double y = a + b * static_cast<double>(first);
    if (!(y > 0) || !(b > 0) || !(s > 1)) {
        throw std::invalid_argument("power_tail: requires a + b*first > 0, b > 0, s > 1");
    }
    const double two_pi = 2 * std::numbers::pi;
    const double f0 = std::pow(y, -s);

    // |f^(j)(first)| = b^j (s)_j y^(-s-j); track it incrementally.
    double deriv = f0; // |f^(0)|
    int order = 0;
    auto advance_to = [&](int j) {
        while (order < j) {
            deriv *= b * (s + order) / y;
            ++order;
        }
    };

    double value = f0 * y / (b * (s - 1)) + 0.5 * f0;
    double best_bound = INFINITY;
    const double zeta_max = std::numbers::pi * std::numbers::pi / 6;

    // The q = 0 remainder |R_0| <= (1/2) |f(first)| is the crude fallback.
    best_bound = 0.5 * f0;
    double scale = 1; // (2 pi)^(2q)
    double factorial = 1; // (2q)!
    for (int q = 1; q <= static_cast<int>(even_bernoulli.size()); ++q) {
        advance_to(2 * q - 1);
        // f^(2q-1) < 0 for a completely monotone summand.
        const double odd_deriv = -deriv;
        factorial *= (2.0 * q - 1) * (2.0 * q);
        scale *= two_pi * two_pi;
        const double bound = 2 * zeta_max / scale * deriv;
        if (bound >= best_bound) {
            break;
        }
        value -= even_bernoulli[q - 1] / factorial * odd_deriv;
        best_bound = bound;
        if (best_bound <= target) {
            break;
        }
    }
    return {value, best_bound};
}

} // namespace cardinal::detail
