#pragma once

#include <cmath>
#include <concepts>
#include <span>

namespace cardinal::detail {

/// Error-free transformation: a + b == sum + err exactly.
template <std::floating_point Real>
constexpr void two_sum(Real a, Real b, Real& sum, Real& err) noexcept
{
    sum = a + b;
    const Real bb = sum - a;
    err = (a - (sum - bb)) + (b - bb);
}

/// Error-free product via fused multiply-add: a * b == prod + err exactly.
template <std::floating_point Real>
inline void two_prod(Real a, Real b, Real& prod, Real& err) noexcept
{
    prod = a * b;
    err = std::fma(a, b, -prod);
}

/// Neumaier-style compensated accumulator.
template <std::floating_point Real = double>
class CompensatedSum {
public:
    constexpr CompensatedSum() = default;

    constexpr void add(Real x) noexcept
    {
        Real s, e;
        two_sum(sum_, x, s, e);
        sum_ = s;
        comp_ += e;
    }

    constexpr CompensatedSum& operator+=(Real x) noexcept
    {
        add(x);
        return *this;
    }

    [[nodiscard]] constexpr Real value() const noexcept { return sum_ + comp_; }

private:
    Real sum_ = 0;
    Real comp_ = 0;
};

/// Compensated Horner evaluation (Graillat, Langlois, Louvet).
/// coeffs are ordered by ascending power. Result is as accurate as if computed
/// in twice the working precision, then rounded.
template <std::floating_point Real>
Real compensated_horner(std::span<const Real> coeffs, Real x) noexcept
{
    if (coeffs.empty()) {
        return Real(0);
    }
    Real value = coeffs.back();
    Real correction = 0;
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        Real prod, prod_err, sum, sum_err;
        two_prod(value, x, prod, prod_err);
        two_sum(prod, coeffs[i], sum, sum_err);
        value = sum;
        correction = correction * x + (prod_err + sum_err);
    }
    return value + correction;
}

/// Horner evaluation returning (p(x), p'(x)).
template <std::floating_point Real>
constexpr void horner_with_derivative(std::span<const Real> coeffs, Real x, Real& p, Real& dp) noexcept
{
    p = 0;
    dp = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        dp = dp * x + p;
        p = p * x + coeffs[i];
    }
}

} // namespace cardinal::detail
