#pragma once

#include <optional>
#include <span>
#include <vector>

#include "desinc/params.hpp"

namespace desinc {

enum class BoundTheorem { SePsiTilde5, DePhi5 };

/// Intermediate constants of a bound. For the single-exponential bound
/// `discretization` and `truncation` hold the tilde constants and `c_d` is
/// unused (0).
struct BoundComponents {
    double discretization = 0.0;
    double truncation = 0.0;
    double c_d = 0.0;
};

struct ErrorBound {
    BoundTheorem theorem = BoundTheorem::SePsiTilde5;
    int n = 0;
    double constant_part = 0.0;  // n-independent factor
    double bound_value = 0.0;    // constant_part times the n-dependent decay
    BoundComponents components;
};

/**
 * A-priori bound for the psi5-tilde approximation with the single-exponential
 * mesh:
 *
 *   [2 C~_D / (pi d (1 - e^{-2 sqrt(pi d mu)})) + C~_T sqrt(mu/(pi d))]
 *     * sqrt(n) e^{-sqrt(pi d mu n)}.
 *
 * Requires 0 < d < pi (RegimeError otherwise) and both K constants
 * (ContractError otherwise).
 */
[[nodiscard]] ErrorBound se_bound(const DecayParams& p, int n);

/**
 * A-priori bound C e^{-pi d n / log(2 d n / mu)} for the phi5 approximation
 * with the double-exponential mesh.
 *
 * Refuses with RegimeError outside the proved regime: d >= d_L, threshold
 * condition false, or n < mu e / (2 d). Requires both K constants.
 */
[[nodiscard]] ErrorBound de_bound(const DecayParams& p, int n);

/// Margins of the real-axis inequalities used by the truncation estimates,
/// at one point x (u = pi sinh x, l = log(1 + e^u)). Each margin is
/// nonnegative when its inequality holds.
struct LemmaMargin {
    double x = 0.0;
    /// 1 - |l/(1+l) * (1+e^u)/e^u|
    double log_over_exp = 0.0;
    /// 1/log 2 - 1/l, for x >= 0
    std::optional<double> right_half;
    /// 1/(1 - log 2) - 1/|l - 1|, for x <= 0
    std::optional<double> left_half;

    [[nodiscard]] double min_margin() const noexcept;
};

[[nodiscard]] std::vector<LemmaMargin> lemma_margins(std::span<const double> xs);

}  // namespace desinc
