#pragma once

// Favard constants
//     K_m = (4/pi) sum_{l>=0} (-1)^{l(m+1)} / (2l+1)^{m+1}.

#include "cardinal/detail/euler_maclaurin.hpp"
#include "cardinal/detail/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace cardinal {

struct FavardConstant {
    int index = 0;
    double value = 0;
    long series_terms = 0;
    /// Bound on |value - K_m|: series truncation plus a floating-point allowance.
    double tail_bound = 0;
};

namespace detail {

inline constexpr long favard_max_terms = 1L << 26;

inline double rounding_allowance(double value) noexcept
{
    return 16 * std::numeric_limits<double>::epsilon() * std::abs(value);
}

} // namespace detail

/// Exact values for m = 0..7, absent beyond.
inline std::optional<double> favard_closed_form(int m)
{
    constexpr double pi = std::numbers::pi;
    switch (m) {
    case 0: return 1.0;
    case 1: return pi / 2;
    case 2: return pi * pi / 8;
    case 3: return pi * pi * pi / 24;
    case 4: return 5 * std::pow(pi, 4) / 384;
    case 5: return std::pow(pi, 5) / 240;
    case 6: return 61 * std::pow(pi, 6) / 46080;
    case 7: return 17 * std::pow(pi, 7) / 40320;
    default: return std::nullopt;
    }
}

/**
 * K_m to relative accuracy rtol.
 *
 * Odd m: all-positive series; a short direct head plus an Euler-Maclaurin
 * tail whose remainder is bounded rigorously. Even m >= 2: alternating
 * series summed smallest-first, remainder bounded by the first omitted term.
 * m = 0 is the Leibniz series and is returned exactly.
 */
inline FavardConstant favard(int m, double rtol)
{
    if (m < 0) {
        throw std::invalid_argument("favard: index must be non-negative");
    }
    if (!(rtol > 0)) {
        throw std::invalid_argument("favard: rtol must be positive");
    }
    if (m == 0) {
        return {0, 1.0, 0, 0.0};
    }
    const double p = m + 1.0;
    const double to_value = 4 / std::numbers::pi;

    auto head = [p](long terms) {
        detail::CompensatedSum<double> sum;
        const bool alternating = (static_cast<int>(p) % 2) == 1;
        for (long l = terms - 1; l >= 0; --l) {
            const double term = std::pow(2.0 * static_cast<double>(l) + 1.0, -p);
            sum += (alternating && (l % 2 == 1)) ? -term : term;
        }
        return sum.value();
    };

    if (m % 2 == 1) {
        // The series is >= 1, so an absolute error of rtol is relative error <= rtol.
        long terms = 8;
        detail::TailEstimate tail = detail::power_tail(1.0, 2.0, p, terms, rtol);
        while (tail.bound > rtol && terms < detail::favard_max_terms) {
            terms *= 2;
            tail = detail::power_tail(1.0, 2.0, p, terms, rtol);
        }
        const double value = to_value * (head(terms) + tail.value);
        return {m, value, terms, to_value * tail.bound + detail::rounding_allowance(value)};
    }

    // Partial sums of the alternating series stay above 1 - 3^-p.
    const double lower = 1.0 - std::pow(3.0, -p);
    const double needed = (std::pow(rtol * lower, -1.0 / p) - 1.0) / 2.0;
    const double capped = std::clamp(std::ceil(needed), 1.0, static_cast<double>(detail::favard_max_terms));
    const long terms = static_cast<long>(capped);
    const double remainder = std::pow(2.0 * static_cast<double>(terms) + 1.0, -p);
    const double value = to_value * head(terms);
    return {m, value, terms, to_value * remainder + detail::rounding_allowance(value)};
}

} // namespace cardinal
