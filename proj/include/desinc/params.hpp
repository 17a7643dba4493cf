#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "desinc/sinc.hpp"

namespace desinc {

/**
 * Analytic parameters of a target function f:
 *
 *   f analytic on the image of the strip |Im x| < d,
 *   |f(z)| <= k_minus |z|^{-alpha}     on the left half,
 *   |f(z)| <= k_plus  |e^{-z}|^{beta}   on the right half,
 *   mu = min(alpha, beta).
 *
 * The K constants are optional: some parameter sets only assert their
 * existence, which is enough to run an approximation but not to bound it.
 */
struct DecayParams {
    double d = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<double> k_minus;
    std::optional<double> k_plus;
    double mu = 0.0;

    [[nodiscard]] bool has_constants() const noexcept { return k_minus.has_value() && k_plus.has_value(); }

    /// Throws DomainError on a nonpositive parameter or mu != min(alpha, beta).
    void validate() const;

    /// Builds a parameter set with mu = min(alpha, beta).
    [[nodiscard]] static DecayParams make(double d, double alpha, double beta,
                                          std::optional<double> k_minus = std::nullopt,
                                          std::optional<double> k_plus = std::nullopt);
};

/// log(e / (e - 1)), the only L for which the double-exponential bound
/// constants are established.
inline const double kDeStripL = std::log(std::numbers::e / (std::numbers::e - 1.0));

/// Geometry of the threshold condition for a strip half-width d.
struct ThresholdGeometry {
    double L = 0.0;
    double d = 0.0;
    double r0 = 0.0;   // arsinh(L / (pi cos d))
    double r1 = 0.0;   // log((1 + cos d) / sin d)
    double c_d = 0.0;  // (pi/2) / cosh(r1 - r0)
};

struct ThresholdCheck {
    bool holds = false;
    double lhs = 0.0;  // {cosh(r1-r0) - 1/cosh^2(r1-r0)} cosh(r0), compared to sqrt(3/2)
    ThresholdGeometry geometry;
};

/// Single-exponential mesh: M = ceil(mu n / alpha), N = ceil(mu n / beta),
/// h = sqrt(pi d / (mu n)).
[[nodiscard]] SincGrid se_mesh(int n, const DecayParams& p);

/// Double-exponential mesh: h = log(2 d n / mu) / n,
/// M = n - floor(log(alpha/mu)/h), N = n - floor(log(beta/mu)/h).
/// Throws RegimeError when 2 d n / mu <= 1.
[[nodiscard]] SincGrid de_mesh(int n, const DecayParams& p);

/// arccos(sqrt(2 / (1 + sqrt(1 + (2 pi / L)^2)))), in (0, pi/2).
[[nodiscard]] double d_upper_limit(double L = kDeStripL);

/// Evaluates the threshold condition on d. Throws DomainError unless
/// 0 < d < pi/2.
[[nodiscard]] ThresholdCheck threshold_holds(double d, double L = kDeStripL);

/// Smallest n with n >= mu e / (2 d).
[[nodiscard]] int min_n_for_bound(const DecayParams& p);

/// Describes the first violated precondition of the double-exponential
/// bound (d < d_L, threshold condition, n large enough), or nullopt if n and
/// p are inside the proved regime.
[[nodiscard]] std::optional<std::string> de_regime_violation(const DecayParams& p, int n);

}  // namespace desinc
