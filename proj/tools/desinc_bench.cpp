// Convergence benchmark: sweeps n for the psi5 / psi5-tilde / phi5 Sinc
// approximations of f1 or f2, measures the maximum error on the 403-point
// grid, and emits CSV with the matching a-priori bounds.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "desinc/bench.hpp"
#include "desinc/error.hpp"

namespace {

using desinc::bench::kExitUsage;

int usage_error(const std::string& message)
{
    std::cerr << "desinc_bench: " << message << '\n';
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sinc approximation convergence benchmark"};

    std::string function_name = "f1";
    std::vector<std::string> method_names;
    std::optional<int> n_from;
    std::optional<int> n_to;
    int n_step = 5;
    std::vector<int> n_list;
    std::string out_path;
    bool check_bounds = false;
    std::optional<double> d_override;

    app.add_option("--function", function_name, "Test function")->check(CLI::IsMember({"f1", "f2"}));
    app.add_option("--method", method_names, "Method (repeatable); default: all")
        ->check(CLI::IsMember({"t21", "t22", "t23"}))
        ->allow_extra_args(false);
    app.add_option("--n-from", n_from, "First n of the sweep")->check(CLI::PositiveNumber);
    app.add_option("--n-to", n_to, "Last n of the sweep (inclusive)")->check(CLI::PositiveNumber);
    app.add_option("--n-step", n_step, "Step of the sweep")->check(CLI::PositiveNumber);
    app.add_option("--n-list", n_list, "Comma-separated n values; overrides the range")->delimiter(',');
    app.add_option("--out", out_path, "Output CSV path (default: stdout)");
    app.add_flag("--check-bounds", check_bounds, "Fail (exit 2) if any observed error exceeds its bound");
    app.add_option("--d", d_override, "Override the strip half-width d of every method");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    desinc::bench::RunConfig config;
    config.function = *desinc::bench::parse_function(function_name);
    if (method_names.empty()) {
        method_names = {"t21", "t22", "t23"};
    }
    for (const auto& name : method_names) {
        config.methods.push_back(*desinc::bench::parse_method(name));
    }

    if (!n_list.empty()) {
        config.n_values = n_list;
    } else if (n_from || n_to) {
        if (!n_from || !n_to) {
            return usage_error("--n-from and --n-to must be given together");
        }
        if (*n_to < *n_from) {
            return usage_error("--n-to must not be smaller than --n-from");
        }
        for (int n = *n_from; n <= *n_to; n += n_step) {
            config.n_values.push_back(n);
        }
    }
    config.check_bounds = check_bounds;
    config.d_override = d_override;
    config.diagnostics = &std::cerr;

    desinc::bench::RunResult result;
    try {
        result = desinc::bench::run(config);
    } catch (const desinc::RegimeError& e) {
        return usage_error(e.what());
    } catch (const desinc::DomainError& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }

    if (out_path.empty()) {
        desinc::bench::write_csv(std::cout, result.rows);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            return usage_error("cannot open " + out_path + " for writing");
        }
        desinc::bench::write_csv(out, result.rows);
    }
    return result.exit_status;
}
