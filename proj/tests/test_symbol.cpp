#include "cardinal/favard.hpp"
#include "cardinal/norms.hpp"
#include "cardinal/symbol.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <numbers>
#include <random>

using namespace cardinal;

namespace {
constexpr double pi = std::numbers::pi;

double favard_ratio(int m)
{
    return pi * pi * favard(2 * m - 1, 1e-15).value / favard(2 * m + 1, 1e-15).value;
}
} // namespace

TEST(CanonicalAngle, ReducesToHalfOpenPeriod)
{
    EXPECT_EQ(canonical_angle(0.0), 0.0);
    EXPECT_EQ(canonical_angle(two_pi), 0.0);
    EXPECT_NEAR(canonical_angle(-pi / 2), 1.5 * pi, 1e-15);
    EXPECT_NEAR(canonical_angle(5 * pi), pi, 1e-14);
    EXPECT_LT(canonical_angle(-1e-300), two_pi);
}

TEST(SymbolFourier, NamedValues)
{
    EXPECT_NEAR(symbol_fourier(1, pi), 1.0 / 3, 1e-16);
    EXPECT_EQ(symbol_fourier(0, 1.234), 1.0);
    EXPECT_DOUBLE_EQ(symbol_fourier(1, 0.0), 1.0);
}

TEST(SymbolLattice, NamedValues)
{
    EXPECT_NEAR(symbol_lattice(1, pi, 1e-12).value, 1.0 / 3, 1e-12);
    EXPECT_NEAR(symbol_lattice(0, pi, 1e-12).value, 1.0, 1e-12);
    EXPECT_EQ(symbol_lattice(2, 0.0, 1e-12).value, 1.0);
    EXPECT_EQ(symbol_lattice(2, two_pi, 1e-12).value, 1.0);
    EXPECT_EQ(symbol_lattice(1, pi, 1e-12).method, SymbolMethod::lattice);
}

TEST(SymbolLattice, DegreeZeroIsIdenticallyOne)
{
    // sum_l (w + 2 pi l)^-2 = 1 / (4 sin^2(w/2)) exactly.
    for (int i = 1; i < 100; ++i) {
        const auto eval = symbol_lattice(0, two_pi * i / 100, 1e-13);
        EXPECT_NEAR(eval.value, 1.0, 1e-13) << i;
        EXPECT_LE(std::abs(eval.value - 1.0), eval.tail_bound + 1e-15) << i;
    }
}

TEST(SymbolLattice, TailBoundCoversActualError)
{
    for (int m = 0; m <= 6; ++m) {
        const FourierSymbol exact(m);
        for (double rtol : {1e-3, 1e-6, 1e-13}) {
            for (int i = 1; i < 32; ++i) {
                const double w = two_pi * i / 32;
                const auto eval = symbol_lattice(m, w, rtol);
                EXPECT_LE(eval.tail_bound, rtol * eval.value);
                EXPECT_LE(std::abs(eval.value - exact(w)), eval.tail_bound + 64 * std::numeric_limits<double>::epsilon() * exact(w)) << m << " " << w;
            }
        }
    }
}

TEST(SymbolLattice, RejectsBadArguments)
{
    EXPECT_THROW(symbol_lattice(1, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(symbol_lattice(-1, 1.0, 1e-6), std::invalid_argument);
}

TEST(Symbol, ThreeWayAgreement)
{
    for (int m = 0; m <= 6; ++m) {
        const FourierSymbol fourier(m);
        const EfSymbol ef(m);
        for (int i = 0; i < 256; ++i) {
            const double w = two_pi * i / 256;
            const double f = fourier(w);
            const double lat = symbol_lattice(m, w, 1e-13).value;
            const double e = ef(w);
            EXPECT_LE(std::abs(f - lat), 1e-10 * f);
            EXPECT_LE(std::abs(f - e), 1e-10 * f);
            EXPECT_LE(std::abs(lat - e), 1e-10 * f);
        }
    }
}

TEST(Symbol, ParsevalBridge)
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> degree(0, 4), count(1, 30);
    for (int trial = 0; trial < 50; ++trial) {
        const CardinalSpline s(degree(rng), 1.0, oracle::random_coeffs(rng, count(rng)));
        const double time_domain = l2_norm_sq(s);
        EXPECT_NEAR(l2_norm_sq_parseval(s), time_domain, 1e-9 * time_domain);
    }
}

TEST(RatioL, NamedValues)
{
    EXPECT_NEAR(ratio_L(1, pi), 12.0, 1e-13);
    EXPECT_EQ(ratio_L(1, 0.0), 0.0);
    EXPECT_NEAR(ratio_L(2, pi), 10.0, 1e-13);
    EXPECT_THROW(ratio_L(0, 1.0), std::invalid_argument);
}

TEST(RatioL, EvenAboutPiAndPeriodic)
{
    for (int m = 1; m <= 6; ++m) {
        const RatioL L(m);
        for (double d : {0.1, 0.7, 1.9, 3.0}) {
            EXPECT_NEAR(L(pi + d), L(pi - d), 1e-13 * L(pi));
            EXPECT_NEAR(L(d), L(d + two_pi), 1e-13 * L(pi));
        }
    }
}

TEST(RatioL, ClosedFormAtPi)
{
    for (int m = 1; m <= 6; ++m) {
        EXPECT_NEAR(ratio_L(m, pi), favard_ratio(m), 1e-10 * favard_ratio(m)) << m;
    }
}

TEST(RatioL, NondecreasingOnZeroToPi)
{
    for (int m = 1; m <= 6; ++m) {
        const RatioL L(m);
        double previous = L(0.0);
        for (int i = 1; i <= 2048; ++i) {
            const double value = L(uniform_angle(i, 4096));
            ASSERT_GE(value, previous) << "m=" << m << " i=" << i;
            previous = value;
        }
    }
}

TEST(ArgmaxRatio, NamedValues)
{
    const auto one = argmax_ratio(1, 4096);
    EXPECT_NEAR(one.omega, pi, two_pi / 4096);
    EXPECT_NEAR(one.value, 12.0, 1e-6);

    const auto three = argmax_ratio(3, 4096);
    EXPECT_NEAR(three.omega, pi, two_pi / 4096);
    EXPECT_NEAR(three.value, favard_ratio(3), 1e-6 * favard_ratio(3));

    EXPECT_EQ(argmax_ratio(1, 16).omega, pi);
}

TEST(ArgmaxRatio, OddGridStillFindsPi)
{
    for (int m = 1; m <= 6; ++m) {
        const auto best = argmax_ratio(m, 8193);
        EXPECT_NEAR(best.omega, pi, two_pi / 8193);
        EXPECT_NEAR(best.value, favard_ratio(m), 1e-6 * favard_ratio(m));
    }
}

TEST(ArgmaxRatio, Errors)
{
    EXPECT_THROW(argmax_ratio(1, 15), std::invalid_argument);
    EXPECT_THROW(argmax_ratio(0, 64), std::invalid_argument);
}

TEST(UniformAngle, HitsPiExactly)
{
    for (long n : {16L, 4096L, 4098L, 1000L}) {
        EXPECT_EQ(uniform_angle(n / 2, n), pi) << n;
    }
}
