// Watch ||s'|| / ||s|| climb toward the sharp constant as the Fejer-extremal
// spline grows, for cubic splines on unit knots.

#include "cardinal/cardinal.hpp"

#include <cstdio>

int main()
{
    constexpr int degree = 3;
    const double constant = cardinal::sharp_constant(degree, 1, 1.0);
    std::printf("sharp constant for m=%d, k=1: %.12f\n", degree, constant);
    std::printf("%6s %16s %10s\n", "n", "ratio", "fraction");
    for (int n = 0; n <= 1023; n = 2 * n + 1) {
        const double ratio = cardinal::extremal_ratio(degree, n);
        std::printf("%6d %16.12f %10.6f\n", n, ratio, ratio / constant);
    }

    const auto max = cardinal::argmax_ratio(degree, 4096);
    std::printf("max L(w) = %.12f at w = %.12f (constant^2 = %.12f)\n", max.value, max.omega, constant * constant);
}
