#pragma once

// Euler-Frobenius polynomials E_n(z) = sum_{j=0}^{n-1} n! N_n(j+1) z^j and
// their roots, which are simple, real, negative and closed under z -> 1/z.

#include "cardinal/bspline.hpp"
#include "cardinal/detail/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace cardinal {

/// n! * [N_n(1), ..., N_n(n)], ascending powers of z.
/// The factorial-scaled B-spline recurrence is carried out directly, so the
/// values are exact integers while they fit in a double (n <= 19).
inline std::vector<double> ef_coefficients(int n)
{
    if (n <= 0) {
        throw std::invalid_argument("ef_coefficients: degree must be positive");
    }
    // scaled[j] = d! N_d(j), j = 0..d+1, starting from N_0(0) = 1.
    std::vector<double> scaled{1.0};
    for (int d = 1; d <= n; ++d) {
        std::vector<double> next(static_cast<std::size_t>(d) + 2, 0.0);
        for (int j = 1; j <= d; ++j) {
            const double here = j < static_cast<int>(scaled.size()) ? scaled[j] : 0.0;
            const double left = scaled[j - 1];
            next[j] = j * here + (d + 1 - j) * left;
        }
        scaled = std::move(next);
    }
    return {scaled.begin() + 1, scaled.begin() + 1 + n};
}

/// Scaled residual of E_n at a claimed root. Uses the palindromic symmetry
/// E_n(z) = z^{n-1} E_n(1/z) to evaluate inside the unit disc.
inline double ef_residual(std::span<const double> coeffs, double root)
{
    const double z = std::abs(root) > 1 ? 1 / root : root;
    const double biggest = *std::max_element(coeffs.begin(), coeffs.end());
    return std::abs(detail::compensated_horner(coeffs, z)) / biggest;
}

namespace detail {

// Safeguarded Newton inside a sign-change bracket.
inline double refine_root(std::span<const double> coeffs, double lo, double hi)
{
    double f_lo = compensated_horner(coeffs, lo);
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double fx = compensated_horner(coeffs, x);
        if (fx == 0) {
            return x;
        }
        if ((fx < 0) == (f_lo < 0)) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
        }
        double p, dp;
        horner_with_derivative(coeffs, x, p, dp);
        double next = dp != 0 ? x - fx / dp : 0.5 * (lo + hi);
        if (!(next > std::min(lo, hi) && next < std::max(lo, hi))) {
            next = 0.5 * (lo + hi);
        }
        const double step = std::abs(next - x);
        x = next;
        if (step <= 1e-15 * std::abs(x) || std::abs(hi - lo) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
            break;
        }
    }
    return x;
}

} // namespace detail

/**
 * All n-1 roots of E_n (n odd), ascending.
 *
 * Every root lies in [-B, -1/B] with B = 1 + max coefficient (Cauchy bound,
 * leading coefficient 1). Roots are isolated by sign changes on a logarithmic
 * grid over that range, then polished to ~1e-14 relative. The grid is
 * refined if the count of sign changes is short.
 */
inline std::vector<double> ef_roots(int n)
{
    if (n <= 0 || n % 2 == 0) {
        throw std::invalid_argument("ef_roots: degree must be a positive odd integer");
    }
    if (n == 1) {
        return {};
    }
    const auto coeffs = ef_coefficients(n);
    const std::size_t expected = static_cast<std::size_t>(n) - 1;
    const double bound = 1.0 + *std::max_element(coeffs.begin(), coeffs.end());
    const double log_lo = -std::log(2 * bound);
    const double log_hi = std::log(2 * bound);

    for (int per_unit = 32; per_unit <= 32 * 1024; per_unit *= 4) {
        const int points = static_cast<int>(std::ceil((log_hi - log_lo) * per_unit)) + 1;
        std::vector<std::pair<double, double>> brackets;
        double prev_z = -std::exp(log_lo);
        double prev_f = detail::compensated_horner<double>(coeffs, prev_z);
        for (int i = 1; i < points; ++i) {
            const double z = -std::exp(log_lo + (log_hi - log_lo) * i / (points - 1));
            const double f = detail::compensated_horner<double>(coeffs, z);
            if (f == 0) {
                brackets.emplace_back(z, z);
            } else if ((f < 0) != (prev_f < 0) && prev_f != 0) {
                brackets.emplace_back(z, prev_z);
            }
            prev_z = z;
            prev_f = f;
        }
        if (brackets.size() != expected) {
            continue;
        }
        std::vector<double> roots;
        roots.reserve(expected);
        for (const auto& [lo, hi] : brackets) {
            roots.push_back(lo == hi ? lo : detail::refine_root(coeffs, lo, hi));
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    throw std::runtime_error("ef_roots: root count mismatch");
}

/// Roots in [-1, 0), one from each reciprocal pair, ascending.
inline std::vector<double> reciprocal_representatives(std::span<const double> roots)
{
    std::vector<double> reps;
    for (double r : roots) {
        if (r >= -1.0 && r < 0.0) {
            reps.push_back(r);
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

/// min over mu in roots of |lambda * mu - 1|.
inline double reciprocity_residual(std::span<const double> roots, double lambda)
{
    double best = INFINITY;
    for (double mu : roots) {
        best = std::min(best, std::abs(lambda * mu - 1.0));
    }
    return best;
}

/// Every root of `lower` sits strictly inside its own gap between consecutive
/// roots of `higher`. Both inputs ascending. Vacuously true for empty `lower`.
inline bool strictly_interlaced(std::span<const double> higher, std::span<const double> lower)
{
    if (lower.size() >= higher.size()) {
        return false;
    }
    std::size_t previous_gap = 0;
    bool first = true;
    for (double r : lower) {
        auto it = std::upper_bound(higher.begin(), higher.end(), r);
        if (it == higher.begin() || it == higher.end() || *(it - 1) == r) {
            return false;
        }
        const auto gap = static_cast<std::size_t>(it - higher.begin());
        if (!first && gap <= previous_gap) {
            return false;
        }
        previous_gap = gap;
        first = false;
    }
    return true;
}

/**
 * (lambda'_i - lambda_i)(1 - lambda'_i lambda_i) for i = 0..m-3, where
 * lambda are the [-1, 0) representatives of E_{2m-1}, lambda' those of
 * E_{2m-3}, both taken in ascending order. Empty for m = 2.
 */
inline std::vector<double> ef_sign_products(int m)
{
    if (m < 2) {
        throw std::invalid_argument("ef_sign_products: need m >= 2");
    }
    const auto upper = reciprocal_representatives(ef_roots(2 * m - 1));
    const auto lower = reciprocal_representatives(ef_roots(2 * m - 3));
    std::vector<double> out;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        out.push_back((lower[i] - upper[i]) * (1.0 - lower[i] * upper[i]));
    }
    return out;
}

/// E_n with its coefficients and roots.
struct EulerFrobenius {
    int degree = 1;
    std::vector<double> coeffs;
    std::vector<double> roots;

    static EulerFrobenius make(int n) { return {n, ef_coefficients(n), ef_roots(n)}; }

    [[nodiscard]] double operator()(double z) const { return detail::compensated_horner<double>(coeffs, z); }
};

/**
 * Periodized squared symbol of N_m in product form,
 *
 *     C_m * prod_l (1 - 2 lambda_l cos w + lambda_l^2) / |lambda_l|,
 *
 * over one root lambda_l of E_{2m+1} from each reciprocal pair. C_m is fixed
 * so the value at w = 0 equals the autocorrelation series there.
 */
class EfSymbol {
public:
    explicit EfSymbol(int degree) : degree_(degree)
    {
        if (degree < 0) {
            throw std::invalid_argument("EfSymbol: degree must be non-negative");
        }
        reps_ = reciprocal_representatives(ef_roots(2 * degree + 1));
        const auto a = gram_autocorrelation(degree);
        double at_zero = a[0];
        for (std::size_t j = 1; j < a.size(); ++j) {
            at_zero += 2 * a[j];
        }
        normalization_ = at_zero / product(1.0);
    }

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] std::span<const double> representatives() const noexcept { return reps_; }
    [[nodiscard]] double normalization() const noexcept { return normalization_; }

    [[nodiscard]] double operator()(double omega) const { return normalization_ * product(std::cos(omega)); }

private:
    [[nodiscard]] double product(double cos_omega) const
    {
        double p = 1;
        for (double lambda : reps_) {
            p *= (1.0 - 2.0 * lambda * cos_omega + lambda * lambda) / std::abs(lambda);
        }
        return p;
    }

    int degree_;
    std::vector<double> reps_;
    double normalization_ = 1;
};

inline double symbol_via_ef(int degree, double omega) { return EfSymbol(degree)(omega); }

} // namespace cardinal
