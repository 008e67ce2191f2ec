#pragma once

// Cardinal B-splines N_m with integer knots 0, 1, ..., m+1, and finite
// spline series s(x) = sum_j c_j N_m(x/spacing - (offset + j)).

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cardinal {

/**
 * Values of every degree-m cardinal B-spline that is nonzero on the unit
 * interval [i, i+1), evaluated at i + u:
 *
 *     window[r] = N_m(u + r),   r = 0..m,   0 <= u < 1.
 *
 * Built by the two-term recurrence
 *     N_d(y) = (y N_{d-1}(y) + (d+1-y) N_{d-1}(y-1)) / d,
 * which only combines nonnegative terms and is stable at every degree.
 */
template <std::floating_point Real>
std::vector<Real> bspline_window(int degree, Real u)
{
    std::vector<Real> v(static_cast<std::size_t>(degree) + 1, Real(0));
    v[0] = 1;
    for (int d = 1; d <= degree; ++d) {
        // In place, high index first so v[r-1] is still the degree d-1 value.
        for (int r = d; r >= 0; --r) {
            const Real y = u + r;
            Real acc = 0;
            if (r < d) {
                acc += y * v[r];
            }
            if (r >= 1) {
                acc += (d + 1 - y) * v[r - 1];
            }
            v[r] = acc / d;
        }
    }
    return v;
}

/// N_m(x). Zero outside [0, m+1); N_0 is the right-continuous indicator of [0, 1).
template <std::floating_point Real>
Real eval_bspline(int degree, Real x)
{
    if (degree < 0) {
        throw std::invalid_argument("eval_bspline: degree must be non-negative");
    }
    if (std::isnan(x)) {
        return x;
    }
    if (x < 0 || x >= degree + 1) {
        return Real(0);
    }
    const Real cell = std::floor(x);
    const auto window = bspline_window(degree, x - cell);
    return window[static_cast<std::size_t>(cell)];
}

/// N_m'(x) = N_{m-1}(x) - N_{m-1}(x-1); right-hand limit where it jumps.
inline double bspline_derivative(int degree, double x)
{
    if (degree < 1) {
        throw std::invalid_argument("bspline_derivative: degree too low (need m >= 1)");
    }
    return eval_bspline(degree - 1, x) - eval_bspline(degree - 1, x - 1.0);
}

/// [N_m(1), ..., N_m(m)]; empty for m = 0.
inline std::vector<double> integer_samples(int degree)
{
    if (degree < 0) {
        throw std::invalid_argument("integer_samples: degree must be non-negative");
    }
    auto window = bspline_window(degree, 0.0);
    // window[r] = N_m(r); N_m(0) = 0 for m >= 1, and for m = 0 there are no interior samples.
    return {window.begin() + 1, window.end()};
}

/// a_j = integral N_m(x) N_m(x+j) dx = N_{2m+1}(m+1+j) for j = 0..m.
inline std::vector<double> gram_autocorrelation(int degree)
{
    if (degree < 0) {
        throw std::invalid_argument("gram_autocorrelation: degree must be non-negative");
    }
    const auto window = bspline_window(2 * degree + 1, 0.0);
    return {window.begin() + degree + 1, window.end()};
}

/// The basis generator N_m as a value type.
class BSplineBasis {
public:
    explicit BSplineBasis(int degree) : degree_(degree)
    {
        if (degree < 0) {
            throw std::invalid_argument("BSplineBasis: degree must be non-negative");
        }
    }

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] double support_begin() const noexcept { return 0.0; }
    [[nodiscard]] double support_end() const noexcept { return degree_ + 1.0; }

    [[nodiscard]] double operator()(double x) const { return eval_bspline(degree_, x); }
    [[nodiscard]] double derivative(double x) const { return bspline_derivative(degree_, x); }

private:
    int degree_;
};

/**
 * s(x) = sum_{j=0}^{n-1} c_j N_m(x/spacing - (offset + j)).
 *
 * On each knot interval (spacing*(l-1), spacing*l) s is a polynomial of degree
 * at most m, and s is m-1 times continuously differentiable.
 */
class CardinalSpline {
public:
    CardinalSpline(int degree, double spacing, std::vector<double> coeffs, long offset = 0)
        : degree_(degree), spacing_(spacing), coeffs_(std::move(coeffs)), offset_(offset)
    {
        if (degree < 0) {
            throw std::invalid_argument("CardinalSpline: degree must be non-negative");
        }
        if (!(spacing > 0) || !std::isfinite(spacing)) {
            throw std::invalid_argument("CardinalSpline: knot spacing must be positive and finite");
        }
    }

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] double spacing() const noexcept { return spacing_; }
    [[nodiscard]] long offset() const noexcept { return offset_; }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

    [[nodiscard]] bool is_zero() const noexcept
    {
        for (double c : coeffs_) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    /// Knot indices [first, last] bounding the support: s vanishes outside
    /// [spacing*first, spacing*last].
    [[nodiscard]] std::pair<long, long> knot_range() const noexcept
    {
        if (coeffs_.empty()) {
            return {offset_, offset_};
        }
        return {offset_, offset_ + static_cast<long>(coeffs_.size()) + degree_};
    }

    friend bool operator==(const CardinalSpline&, const CardinalSpline&) = default;

private:
    int degree_;
    double spacing_;
    std::vector<double> coeffs_;
    long offset_;
};

/// Pointwise value; only the at most m+1 basis functions overlapping x are touched.
inline double spline_eval(const CardinalSpline& s, double x)
{
    const double t = x / s.spacing();
    const double cell = std::floor(t);
    const auto window = bspline_window(s.degree(), t - cell);
    const long i = static_cast<long>(cell);
    const long n = static_cast<long>(s.size());
    const auto c = s.coeffs();
    double value = 0;
    for (int r = 0; r <= s.degree(); ++r) {
        const long j = i - r - s.offset();
        if (j >= 0 && j < n) {
            value += c[static_cast<std::size_t>(j)] * window[static_cast<std::size_t>(r)];
        }
    }
    return value;
}

} // namespace cardinal
