#pragma once

// The command-line front end's computations, one function per subcommand.
// Each returns the table it would print plus the process exit status.

#include "cardinal/bernstein.hpp"
#include "cardinal/euler_frobenius.hpp"
#include "cardinal/favard.hpp"
#include "cardinal/record.hpp"
#include "cardinal/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cardinal {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CommandResult {
    OutputRecord record;
    int exit_code = exit_ok;
    std::string message; // diagnostic for stderr, empty on success
};

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw UsageError(what);
    }
}

inline Cell int_cell(long long v) { return static_cast<std::int64_t>(v); }

inline double relative_gap(double a, double b, double scale) { return std::abs(a - b) / std::abs(scale); }

} // namespace detail

/// Sharp constants and their Favard ingredients for m <= m_max, k <= min(m, k_max).
inline CommandResult cmd_constants(int m_max, int k_max, double spacing, double rtol)
{
    detail::require(m_max >= 0, "constants: --m-max must be non-negative");
    detail::require(k_max >= 0, "constants: --k-max must be non-negative");
    detail::require(spacing > 0 && std::isfinite(spacing), "constants: --spacing must be positive");
    detail::require(rtol > 0, "constants: --rtol must be positive");

    CommandResult result;
    auto& rec = result.record;
    rec.command = "constants";
    rec.parameters = {{"m_max", detail::int_cell(m_max)},
                      {"k_max", detail::int_cell(k_max)},
                      {"spacing", spacing},
                      {"rtol", rtol}};
    rec.columns = {"m", "k", "spacing", "h", "favard_lower_index", "favard_lower", "favard_upper_index",
                   "favard_upper", "constant", "constant_telescoped"};
    for (int m = 0; m <= m_max; ++m) {
        for (int k = 0; k <= std::min(m, k_max); ++k) {
            const int lower_index = 2 * (m - k) + 1;
            const int upper_index = 2 * m + 1;
            rec.rows.push_back({detail::int_cell(m), detail::int_cell(k), spacing, 1.0 / spacing,
                                detail::int_cell(lower_index), favard(lower_index, rtol).value,
                                detail::int_cell(upper_index), favard(upper_index, rtol).value,
                                sharp_constant(m, k, spacing, rtol), sharp_constant_telescoped(m, k, spacing, rtol)});
        }
    }
    return result;
}

/**
 * Sweep over w = 2 pi i / (points - 1), i = 0..points-1, with the three
 * symbol routes, L(w) and the pairwise relative discrepancies. For m = 0
 * the ratio columns are left empty and the exit status is a usage error.
 */
inline CommandResult cmd_symbol(int m, long points, double rtol)
{
    detail::require(m >= 0, "symbol: --m must be non-negative");
    detail::require(points >= 2, "symbol: --points must be at least 2");
    detail::require(rtol > 0, "symbol: --rtol must be positive");

    CommandResult result;
    auto& rec = result.record;
    rec.command = "symbol";
    rec.parameters = {{"m", detail::int_cell(m)}, {"points", detail::int_cell(points)}, {"rtol", rtol}};
    rec.columns = {"omega",       "fourier",          "lattice",         "lattice_tail_bound",
                   "ef_product",  "ratio_L",          "diff_fourier_lattice", "diff_fourier_ef",
                   "diff_lattice_ef", "is_argmax"};

    const bool with_ratio = m >= 1;
    const FourierSymbol fourier(m);
    const EfSymbol ef(m);
    std::optional<RatioL> ratio;
    if (with_ratio) {
        ratio.emplace(m);
    }

    double max_gap = 0;
    long best_row = -1;
    double best_value = -1;
    for (long i = 0; i < points; ++i) {
        const double w = uniform_angle(i, points - 1);
        const double f = fourier(w);
        const auto lat = symbol_lattice(m, w, rtol);
        const double e = ef(w);
        const double g1 = detail::relative_gap(f, lat.value, f);
        const double g2 = detail::relative_gap(f, e, f);
        const double g3 = detail::relative_gap(lat.value, e, f);
        max_gap = std::max({max_gap, g1, g2, g3});
        Cell ratio_cell = std::monostate{};
        if (ratio) {
            const double v = (*ratio)(w);
            ratio_cell = v;
            if (v > best_value) {
                best_value = v;
                best_row = i;
            }
        }
        rec.rows.push_back({w, f, lat.value, lat.tail_bound, e, ratio_cell, g1, g2, g3, std::monostate{}});
    }
    const std::size_t flag = rec.column("is_argmax");
    for (long i = 0; i < points; ++i) {
        rec.rows[static_cast<std::size_t>(i)][flag] = with_ratio ? Cell{i == best_row} : Cell{std::monostate{}};
    }
    rec.summary = {{"max_relative_discrepancy", max_gap}};
    if (with_ratio) {
        rec.summary.emplace_back("argmax_omega", std::get<double>(rec.rows[static_cast<std::size_t>(best_row)][0]));
        rec.summary.emplace_back("max_ratio_L", best_value);
    } else {
        result.exit_code = exit_usage;
        result.message = "symbol: ratio columns need --m >= 1; symbol columns emitted only";
    }
    return result;
}

/// Theorem audit over `trials` random splines; trial t uses seed + t.
inline CommandResult cmd_verify(int m, int k, double spacing, long trials, int count, std::uint64_t seed)
{
    detail::require(m >= 0, "verify: --m must be non-negative");
    detail::require(k >= 0 && k <= m, "verify: --k must satisfy 0 <= k <= m");
    detail::require(spacing > 0 && std::isfinite(spacing), "verify: --spacing must be positive");
    detail::require(trials >= 1, "verify: --trials must be at least 1");
    detail::require(count >= 1, "verify: --count must be at least 1");

    CommandResult result;
    auto& rec = result.record;
    rec.command = "verify";
    rec.parameters = {{"m", detail::int_cell(m)},          {"k", detail::int_cell(k)},
                      {"spacing", spacing},                {"trials", detail::int_cell(trials)},
                      {"count", detail::int_cell(count)},  {"seed", detail::int_cell(static_cast<long long>(seed))}};
    rec.columns = {"trial", "seed", "ratio", "constant", "margin", "satisfied"};

    long violations = 0;
    double min_margin = INFINITY;
    double worst = 0;
    for (long t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        auto s = random_spline(m, count, spacing, trial_seed);
        if (s.is_zero()) {
            continue;
        }
        const auto report = verify_inequality(s, k);
        violations += report.satisfied ? 0 : 1;
        min_margin = std::min(min_margin, report.margin);
        worst = std::max(worst, report.ratio / report.constant);
        rec.rows.push_back({detail::int_cell(t), detail::int_cell(static_cast<long long>(trial_seed)), report.ratio,
                            report.constant, report.margin, report.satisfied});
    }
    rec.summary = {{"violations", detail::int_cell(violations)},
                   {"min_margin", min_margin},
                   {"worst_ratio_over_constant", worst}};
    if (violations > 0) {
        result.exit_code = exit_violation;
        result.message = "verify: " + std::to_string(violations) + " trial(s) violate the bound";
    }
    return result;
}

/// Convergence of the Fejer-extremal ratio towards the one-derivative constant.
inline CommandResult cmd_extremal(int m, const std::vector<int>& n_list)
{
    detail::require(m >= 1, "extremal: --m must be at least 1");
    detail::require(!n_list.empty(), "extremal: --n needs at least one value");
    for (int n : n_list) {
        detail::require(n >= 0, "extremal: every n must be non-negative");
    }

    CommandResult result;
    auto& rec = result.record;
    rec.command = "extremal";
    std::string joined;
    for (int n : n_list) {
        joined += (joined.empty() ? "" : ",") + std::to_string(n);
    }
    rec.parameters = {{"m", detail::int_cell(m)}, {"n_list", joined}};
    rec.columns = {"n", "ratio", "constant", "ratio_over_constant", "monotone"};

    const double constant = sharp_constant(m, 1, 1.0);
    std::vector<double> ratios;
    bool monotone = true;
    for (int n : n_list) {
        const double r = extremal_ratio(m, n);
        if (!ratios.empty() && r < ratios.back()) {
            monotone = false;
        }
        ratios.push_back(r);
    }
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        rec.rows.push_back({detail::int_cell(n_list[i]), ratios[i], constant, ratios[i] / constant, monotone});
    }
    rec.summary = {{"constant", constant}, {"monotone", monotone}, {"final_ratio_over_constant", ratios.back() / constant}};
    return result;
}

/// Roots of E_n for odd n = 3..n_max with structural checks.
inline CommandResult cmd_roots(int n_max)
{
    detail::require(n_max >= 3 && n_max % 2 == 1, "roots: --n-max must be an odd integer >= 3");

    CommandResult result;
    auto& rec = result.record;
    rec.command = "roots";
    rec.parameters = {{"n_max", detail::int_cell(n_max)}};
    rec.columns = {"n", "index", "root", "residual", "reciprocity_residual", "interlaces_lower", "sign_product"};

    double max_residual = 0;
    double max_reciprocity = 0;
    bool all_interlaced = true;
    bool all_signs_positive = true;
    std::vector<double> lower_roots = ef_roots(1);
    for (int n = 3; n <= n_max; n += 2) {
        const auto coeffs = ef_coefficients(n);
        const auto roots = ef_roots(n);
        Cell interlace = std::monostate{};
        if (!lower_roots.empty()) {
            const bool ok = strictly_interlaced(roots, lower_roots);
            all_interlaced = all_interlaced && ok;
            interlace = ok;
        }
        // n = 2m - 1 pairs with E_{2m-3}.
        std::vector<double> signs;
        if (n >= 5) {
            signs = ef_sign_products((n + 1) / 2);
        }
        const auto reps = reciprocal_representatives(roots);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const double residual = ef_residual(coeffs, roots[i]);
            const double recip = reciprocity_residual(roots, roots[i]);
            max_residual = std::max(max_residual, residual);
            max_reciprocity = std::max(max_reciprocity, recip);
            Cell sign = std::monostate{};
            const auto rep = std::find(reps.begin(), reps.end(), roots[i]);
            if (rep != reps.end()) {
                const auto j = static_cast<std::size_t>(rep - reps.begin());
                if (j < signs.size()) {
                    sign = signs[j];
                    all_signs_positive = all_signs_positive && signs[j] > 0;
                }
            }
            rec.rows.push_back({detail::int_cell(n), detail::int_cell(static_cast<long long>(i)), roots[i], residual,
                                recip, interlace, sign});
        }
        lower_roots = roots;
    }
    rec.summary = {{"max_residual", max_residual},
                   {"max_reciprocity_residual", max_reciprocity},
                   {"all_interlaced", all_interlaced},
                   {"all_sign_products_positive", all_signs_positive}};
    return result;
}

} // namespace cardinal
