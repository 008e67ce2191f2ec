// cardinal_cli: sharp L2 Bernstein constants for cardinal splines, symbol
// sweeps, theorem audits, extremal sequences and Euler-Frobenius roots.
//
// Exit status: 0 success, 1 bound violation, 2 usage error, 3 internal error.

#include "cardinal/commands.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct SharedOptions {
    std::string format = "json-lines";
    std::string out;
    double rtol = 1e-12;
    std::uint64_t seed = 0;
};

int emit(const cardinal::CommandResult& result, const SharedOptions& shared)
{
    const auto format = cardinal::parse_format(shared.format);
    if (shared.out.empty()) {
        cardinal::write_record(std::cout, result.record, format);
    } else {
        std::ofstream file(shared.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file '" << shared.out << "'\n";
            return cardinal::exit_usage;
        }
        cardinal::write_record(file, result.record, format);
    }
    if (!result.message.empty()) {
        std::cerr << result.message << '\n';
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sharp L2 Bernstein inequality for cardinal splines"};
    app.require_subcommand(1);

    SharedOptions shared;
    auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--format", shared.format, "Output format")
            ->check(CLI::IsMember({"csv", "json-lines"}))
            ->capture_default_str();
        cmd->add_option("--out", shared.out, "Write output to this path instead of stdout");
        cmd->add_option("--rtol", shared.rtol, "Relative tolerance for series and lattice sums")
            ->capture_default_str();
        cmd->add_option("--seed", shared.seed, "Seed for random splines")->capture_default_str();
    };

    std::function<cardinal::CommandResult()> run;

    int m_max = 3, k_max = 3;
    double spacing = 1.0;
    auto* constants = app.add_subcommand("constants", "Sharp constants and Favard values");
    constants->add_option("--m-max", m_max)->capture_default_str();
    constants->add_option("--k-max", k_max)->capture_default_str();
    constants->add_option("--spacing", spacing, "Knot spacing (h = 1/spacing)")->capture_default_str();
    add_shared(constants);
    constants->callback([&] { run = [&] { return cardinal::cmd_constants(m_max, k_max, spacing, shared.rtol); }; });

    int m = 1;
    long points = 257;
    auto* symbol = app.add_subcommand("symbol", "Sweep the periodized symbol and L(w)");
    symbol->add_option("--m", m)->capture_default_str();
    symbol->add_option("--points", points)->capture_default_str();
    add_shared(symbol);
    symbol->callback([&] { run = [&] { return cardinal::cmd_symbol(m, points, shared.rtol); }; });

    int k = 1;
    long trials = 100;
    int count = 32;
    auto* verify = app.add_subcommand("verify", "Audit the inequality on random splines");
    verify->add_option("--m", m)->capture_default_str();
    verify->add_option("--k", k)->capture_default_str();
    verify->add_option("--spacing", spacing)->capture_default_str();
    verify->add_option("--trials", trials)->capture_default_str();
    verify->add_option("--count", count, "Coefficients per random spline")->capture_default_str();
    add_shared(verify);
    verify->callback(
        [&] { run = [&] { return cardinal::cmd_verify(m, k, spacing, trials, count, shared.seed); }; });

    std::vector<int> n_list{0, 1, 3, 7, 15, 31, 63, 127, 255, 511};
    auto* extremal = app.add_subcommand("extremal", "Convergence of the Fejer extremal sequence");
    extremal->add_option("--m", m)->capture_default_str();
    extremal->add_option("--n", n_list, "Orders n (comma separated)")->delimiter(',')->capture_default_str();
    add_shared(extremal);
    extremal->callback([&] { run = [&] { return cardinal::cmd_extremal(m, n_list); }; });

    int n_max = 7;
    auto* roots = app.add_subcommand("roots", "Euler-Frobenius roots and structure checks");
    roots->add_option("--n-max", n_max)->capture_default_str();
    add_shared(roots);
    roots->callback([&] { run = [&] { return cardinal::cmd_roots(n_max); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cardinal::exit_ok : cardinal::exit_usage;
    }

    try {
        return emit(run(), shared);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return cardinal::exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
