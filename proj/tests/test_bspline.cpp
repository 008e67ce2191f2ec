#include "cardinal/bspline.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace cardinal;

TEST(EvalBspline, NamedValues)
{
    EXPECT_EQ(eval_bspline(0, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(eval_bspline(1, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(eval_bspline(2, 1.5), 0.75);
    EXPECT_EQ(eval_bspline(3, 5.0), 0.0);
}

TEST(EvalBspline, SupportIsExactlyZeroToMPlusOne)
{
    for (int m = 0; m <= 8; ++m) {
        EXPECT_EQ(eval_bspline(m, -1e-12), 0.0);
        EXPECT_EQ(eval_bspline(m, m + 1.0), 0.0);
        EXPECT_EQ(eval_bspline(m, m + 1.5), 0.0);
        EXPECT_GT(eval_bspline(m, 0.5 * (m + 1)), 0.0);
    }
    EXPECT_EQ(eval_bspline(0, 0.0), 1.0); // right-continuous indicator
    EXPECT_EQ(eval_bspline(0, 1.0), 0.0);
}

TEST(EvalBspline, RejectsNegativeDegree) { EXPECT_THROW(eval_bspline(-1, 0.5), std::invalid_argument); }

TEST(EvalBspline, MatchesTruncatedPowerFormula)
{
    for (int m = 0; m <= 8; ++m) {
        for (int i = 0; i <= 4000; ++i) {
            const double x = -1.0 + (m + 3.0) * i / 4000.0;
            EXPECT_NEAR(eval_bspline(m, x), oracle::truncated_power_bspline(m, x), 1e-9) << "m=" << m << " x=" << x;
        }
    }
}

TEST(EvalBspline, PartitionOfUnityAndNonnegativity)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> pick(-20.0, 20.0);
    for (int m = 0; m <= 10; ++m) {
        for (int trial = 0; trial < 1000; ++trial) {
            const double x = pick(rng);
            double sum = 0;
            for (long g = static_cast<long>(std::floor(x)) - m - 1; g <= static_cast<long>(std::floor(x)) + 1; ++g) {
                const double v = eval_bspline(m, x - static_cast<double>(g));
                ASSERT_GE(v, 0.0);
                sum += v;
            }
            ASSERT_NEAR(sum, 1.0, 1e-12) << "m=" << m << " x=" << x;
        }
    }
}

TEST(EvalBspline, StableAtHighDegree)
{
    // Truncated powers lose everything here; the recurrence must stay a partition of unity.
    const int m = 30;
    double sum = 0;
    for (int g = -m - 1; g <= 1; ++g) {
        sum += eval_bspline(m, 0.37 - g);
    }
    EXPECT_NEAR(sum, 1.0, 1e-13);
}

TEST(BsplineDerivative, NamedValues)
{
    EXPECT_EQ(bspline_derivative(1, 0.5), 1.0);
    EXPECT_NEAR(bspline_derivative(2, 1.5), 0.0, 1e-15);
    EXPECT_EQ(bspline_derivative(1, 1.5), -1.0);
    // right-hand limit at the peak of the hat
    EXPECT_EQ(bspline_derivative(1, 1.0), -1.0);
}

TEST(BsplineDerivative, RejectsDegreeZero)
{
    EXPECT_THROW(bspline_derivative(0, 0.5), std::invalid_argument);
    EXPECT_THROW(BSplineBasis(0).derivative(0.5), std::invalid_argument);
}

TEST(BsplineDerivative, MatchesCentralDifferences)
{
    const double h = 1e-6;
    for (int m = 1; m <= 8; ++m) {
        for (int i = 0; i < 200; ++i) {
            const double x = -0.5 + (m + 2.0) * (i + 0.5) / 200.0;
            const double frac = x - std::floor(x);
            if (frac < 1e-3 || frac > 1 - 1e-3) {
                continue;
            }
            const double numeric = (eval_bspline(m, x + h) - eval_bspline(m, x - h)) / (2 * h);
            EXPECT_NEAR(bspline_derivative(m, x), numeric, 1e-5) << "m=" << m << " x=" << x;
        }
    }
}

TEST(IntegerSamples, NamedValues)
{
    EXPECT_TRUE(integer_samples(0).empty());
    const auto s1 = integer_samples(1);
    ASSERT_EQ(s1.size(), 1u);
    EXPECT_DOUBLE_EQ(s1[0], 1.0);
    const auto s2 = integer_samples(2);
    ASSERT_EQ(s2.size(), 2u);
    EXPECT_DOUBLE_EQ(s2[0], 0.5);
    EXPECT_DOUBLE_EQ(s2[1], 0.5);
    const auto s3 = integer_samples(3);
    ASSERT_EQ(s3.size(), 3u);
    EXPECT_DOUBLE_EQ(s3[0], 1.0 / 6);
    EXPECT_DOUBLE_EQ(s3[1], 2.0 / 3);
    EXPECT_DOUBLE_EQ(s3[2], 1.0 / 6);
}

TEST(IntegerSamples, SumToOne)
{
    for (int m = 1; m <= 15; ++m) {
        double sum = 0;
        for (double v : integer_samples(m)) {
            sum += v;
        }
        EXPECT_NEAR(sum, 1.0, 1e-14) << m;
    }
}

TEST(GramAutocorrelation, NamedValues)
{
    const auto a0 = gram_autocorrelation(0);
    ASSERT_EQ(a0.size(), 1u);
    EXPECT_DOUBLE_EQ(a0[0], 1.0);

    const auto a1 = gram_autocorrelation(1);
    ASSERT_EQ(a1.size(), 2u);
    EXPECT_DOUBLE_EQ(a1[0], 2.0 / 3);
    EXPECT_DOUBLE_EQ(a1[1], 1.0 / 6);

    const auto a2 = gram_autocorrelation(2);
    ASSERT_EQ(a2.size(), 3u);
    EXPECT_DOUBLE_EQ(a2[0], 11.0 / 20);
    EXPECT_DOUBLE_EQ(a2[1], 13.0 / 60);
    EXPECT_DOUBLE_EQ(a2[2], 1.0 / 120);

    // Exact rationals from the truncated-power formula in rational arithmetic.
    const auto a3 = gram_autocorrelation(3);
    ASSERT_EQ(a3.size(), 4u);
    EXPECT_DOUBLE_EQ(a3[0], 151.0 / 315);
    EXPECT_DOUBLE_EQ(a3[1], 397.0 / 1680);
    EXPECT_DOUBLE_EQ(a3[2], 1.0 / 42);
    EXPECT_DOUBLE_EQ(a3[3], 1.0 / 5040);
}

TEST(GramAutocorrelation, MatchesQuadratureOfProducts)
{
    for (int m = 0; m <= 6; ++m) {
        const auto a = gram_autocorrelation(m);
        for (int j = 0; j <= m; ++j) {
            const double integral = oracle::integrate_by_cells(
                [m, j](double x) { return oracle::truncated_power_bspline(m, x) * oracle::truncated_power_bspline(m, x + j); },
                0, m + 1, m + 1);
            EXPECT_NEAR(a[j], integral, 1e-13) << "m=" << m << " j=" << j;
        }
    }
}

TEST(GramAutocorrelation, TwoSidedSumIsOne)
{
    for (int m = 0; m <= 12; ++m) {
        const auto a = gram_autocorrelation(m);
        double sum = a[0];
        for (std::size_t j = 1; j < a.size(); ++j) {
            sum += 2 * a[j];
        }
        EXPECT_NEAR(sum, 1.0, 1e-13) << m;
    }
}

TEST(SplineEval, NamedValues)
{
    EXPECT_DOUBLE_EQ(spline_eval(CardinalSpline(1, 1.0, {1.0}), 1.0), 1.0);
    EXPECT_NEAR(spline_eval(CardinalSpline(1, 1.0, {1.0, -1.0}), 1.5), 0.0, 1e-15);
}

TEST(SplineEval, ConstantCoefficientsReproduceConstant)
{
    const double c = -2.75;
    for (int m = 0; m <= 6; ++m) {
        const CardinalSpline s(m, 0.5, std::vector<double>(20, c), -3);
        // interior of the coefficient support: knots from offset+m to offset+n
        for (double t = -3 + m + 0.01; t < -3 + 20; t += 0.173) {
            EXPECT_NEAR(spline_eval(s, 0.5 * t), c, 1e-13) << "m=" << m << " t=" << t;
        }
    }
}

TEST(SplineEval, MatchesDirectBasisSum)
{
    std::mt19937_64 rng(7);
    for (int m = 0; m <= 5; ++m) {
        const auto c = oracle::random_coeffs(rng, 9);
        const CardinalSpline s(m, 2.0, c, 2);
        for (double x = -2; x < 40; x += 0.37) {
            double direct = 0;
            for (std::size_t j = 0; j < c.size(); ++j) {
                direct += c[j] * oracle::truncated_power_bspline(m, x / 2.0 - (2.0 + j));
            }
            EXPECT_NEAR(spline_eval(s, x), direct, 1e-11);
        }
    }
}

TEST(SplineEval, DerivativesContinuousAcrossKnots)
{
    // m-1 continuous derivatives: the spline itself is continuous at knots for m >= 1,
    // and its (m-1)-th one-sided difference quotients agree.
    std::mt19937_64 rng(11);
    for (int m = 1; m <= 4; ++m) {
        const CardinalSpline s(m, 1.0, oracle::random_coeffs(rng, 6));
        for (int knot = 1; knot < 10; ++knot) {
            const double left = spline_eval(s, knot - 1e-9);
            const double right = spline_eval(s, knot + 1e-9);
            EXPECT_NEAR(left, right, 1e-7);
        }
    }
}

TEST(CardinalSpline, RejectsBadSpacingAndDegree)
{
    EXPECT_THROW(CardinalSpline(1, 0.0, {1.0}), std::invalid_argument);
    EXPECT_THROW(CardinalSpline(1, -1.0, {1.0}), std::invalid_argument);
    EXPECT_THROW(CardinalSpline(-1, 1.0, {1.0}), std::invalid_argument);
}

TEST(CardinalSpline, KnotRange)
{
    const CardinalSpline s(3, 1.0, {1, 2, 3}, -2);
    EXPECT_EQ(s.knot_range(), (std::pair<long, long>{-2, 4}));
    EXPECT_EQ(spline_eval(s, -2.0), 0.0);
    EXPECT_EQ(spline_eval(s, 4.0), 0.0);
}
