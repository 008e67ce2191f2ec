#pragma once

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cardinal::detail {

template <std::floating_point Real>
struct QuadratureRule {
    std::vector<Real> nodes;   // on [-1, 1]
    std::vector<Real> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n-1.
/// Nodes by Newton iteration on P_n from Chebyshev-like initial guesses.
template <std::floating_point Real = double>
QuadratureRule<Real> gauss_legendre(int n)
{
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre: need at least one node");
    }
    QuadratureRule<Real> rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Real pi = std::numbers::pi_v<Real>;
    const Real tol = 4 * std::numeric_limits<Real>::epsilon();

    for (int i = 0; i < (n + 1) / 2; ++i) {
        Real x = std::cos(pi * (i + Real(0.75)) / (n + Real(0.5)));
        Real dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            Real p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const Real pn = n == 1 ? x : p1;
            const Real pn_1 = n == 1 ? Real(1) : p0;
            dp = n * (x * pn - pn_1) / (x * x - 1);
            const Real dx = pn / dp;
            x -= dx;
            if (std::abs(dx) <= tol) {
                break;
            }
        }
        // Recompute P_n' at the converged node for the weight.
        Real p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n == 1 ? Real(1) : n * (x * p1 - p0) / (x * x - 1);
        const Real w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0;
    }
    return rule;
}

} // namespace cardinal::detail
