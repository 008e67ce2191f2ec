#include "cardinal/detail/euler_maclaurin.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using cardinal::detail::power_tail;

TEST(PowerTail, OddSquaresAgainstClosedForm)
{
    // sum_{l>=0} (2l+1)^-2 = pi^2/8
    const long double total = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 8;
    for (long first : {1L, 4L, 8L, 32L}) {
        const long double head = oracle::brute_power_sum(1, 2, 2, 0, first);
        const double exact = static_cast<double>(total - head);
        const auto tail = power_tail(1.0, 2.0, 2.0, first, 1e-18);
        EXPECT_LE(std::abs(tail.value - exact), tail.bound + 4e-17) << first;
        if (first >= 8) {
            EXPECT_LT(tail.bound, 1e-12) << first; // the expansion is only asymptotic close to the origin
        }
    }
}

TEST(PowerTail, BoundHoldsAgainstBruteForce)
{
    for (double s : {4.0, 6.0, 10.0}) {
        for (double a : {0.3, 2.0, -1.5}) {
            const double b = 2 * std::numbers::pi;
            const long first = 3;
            // terms beyond 2e5 are below 1e-20 relative for s >= 4
            const long double brute = oracle::brute_power_sum(a, b, s, first, 200000);
            const auto tail = power_tail(a, b, s, first, 0.0);
            const double scale = std::pow(a + b * first, -s);
            EXPECT_LE(std::abs(tail.value - static_cast<double>(brute)), tail.bound + 1e-15 * scale)
                << "s=" << s << " a=" << a;
        }
    }
}

TEST(PowerTail, StopsAtTarget)
{
    const auto loose = power_tail(1.0, 2.0, 4.0, 8, 1e-3);
    const auto tight = power_tail(1.0, 2.0, 4.0, 8, 1e-20);
    EXPECT_LE(loose.bound, 1e-3);
    EXPECT_LE(tight.bound, loose.bound);
}

TEST(PowerTail, RejectsBadArguments)
{
    EXPECT_THROW(power_tail(-10.0, 1.0, 2.0, 3, 1e-10), std::invalid_argument);
    EXPECT_THROW(power_tail(1.0, 0.0, 2.0, 3, 1e-10), std::invalid_argument);
    EXPECT_THROW(power_tail(1.0, 1.0, 1.0, 3, 1e-10), std::invalid_argument);
}
