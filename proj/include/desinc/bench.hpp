#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "desinc/testfns.hpp"

namespace desinc::bench {

/// The 403 points t = 0 and t = +-2^i for i = -50, -49.5, ..., 50, ascending.
[[nodiscard]] std::vector<double> evaluation_grid();

struct ExperimentRow {
    Method method = Method::T23;
    TestFunction function = TestFunction::F1;
    int n = 0;
    double h = 0.0;
    int M = 0;
    int N = 0;
    double observed_max_error = 0.0;
    std::optional<double> error_bound;

    /// True when there is no bound or the observed error does not exceed it.
    [[nodiscard]] bool within_bound() const noexcept
    {
        return !error_bound || observed_max_error <= *error_bound;
    }

    friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

struct RunConfig {
    TestFunction function = TestFunction::F1;
    std::vector<Method> methods;
    std::vector<int> n_values;
    /// Bound mode: regime violations are hard errors and every row must lie
    /// within its bound.
    bool check_bounds = false;
    /// Replaces the preset strip half-width d for every method.
    std::optional<double> d_override;
    /// Progress and warnings; nullptr silences them.
    std::ostream* diagnostics = nullptr;
};

enum ExitStatus : int { kExitOk = 0, kExitUsage = 1, kExitBoundViolation = 2 };

struct RunResult {
    std::vector<ExperimentRow> rows;  // (method, n) order
    int exit_status = kExitOk;
};

/// Default sweep for a method: 2, 7, ..., 142 for single-exponential
/// methods and 2, 7, ..., 57 for the double-exponential one.
[[nodiscard]] std::vector<int> default_n_values(Method method);

/// Parameters used for one method after applying overrides.
[[nodiscard]] DecayParams run_params(const RunConfig& config, Method method);

/// Computes one row. With `bound_mode`, a parameter set outside a bound's
/// proved regime raises RegimeError; otherwise the bound is omitted and a
/// warning is written to `diagnostics`.
[[nodiscard]] ExperimentRow run_one(TestFunction function, Method method, const DecayParams& params, int n,
                                    bool bound_mode, std::ostream* diagnostics = nullptr);

/**
 * Runs every (method, n) pair, possibly concurrently, and returns rows in
 * (method, n) order. Parameter-regime and usage problems raise RegimeError /
 * DomainError; bound violations only set exit_status when check_bounds is on.
 */
[[nodiscard]] RunResult run(const RunConfig& config);

inline constexpr std::string_view kCsvHeader = "method,function,n,h,M,N,observed_max_error,error_bound";

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
[[nodiscard]] std::string to_csv(const std::vector<ExperimentRow>& rows);

/// Parses CSV produced by write_csv. Throws std::invalid_argument on a
/// malformed header or row.
[[nodiscard]] std::vector<ExperimentRow> parse_csv(std::istream& in);
[[nodiscard]] std::vector<ExperimentRow> parse_csv(std::string_view text);

[[nodiscard]] std::optional<Method> parse_method(std::string_view name) noexcept;
[[nodiscard]] std::optional<TestFunction> parse_function(std::string_view name) noexcept;

}  // namespace desinc::bench
