#pragma once

#include <span>

namespace desinc {

/// Uniform Sinc mesh: nodes k*h for k = -M..N.
struct SincGrid {
    double h = 1.0;
    int M = 0;
    int N = 0;

    [[nodiscard]] int size() const noexcept { return M + N + 1; }
    [[nodiscard]] double node(int k) const noexcept { return k * h; }

    /// Throws DomainError unless h > 0 (finite) and M, N >= 0.
    void validate() const;
};

// Below this |pi(x - kh)/h| the basis is evaluated by its two-term series.
inline constexpr double kSincSeriesThreshold = 1e-8;

/// sin(pi * v) with exact zeros at integer v.
[[nodiscard]] double sin_pi(double v) noexcept;

/**
 * Shifted Sinc basis S(k,h)(x) = sin(pi(x - kh)/h) / (pi(x - kh)/h).
 *
 * Returns exactly 1 when x == k*h. Throws DomainError for non-finite x or
 * h <= 0.
 */
[[nodiscard]] double sinc_basis(int k, double h, double x);

/**
 * Truncated cardinal series sum_{k=-M}^{N} samples[k+M] * S(k,h)(x).
 *
 * `samples` is indexed from k = -M, so samples[0] is F(-Mh). Accumulation is
 * compensated and runs in ascending k. Throws ContractError if the sample
 * count is not M+N+1 or a sample is non-finite.
 */
[[nodiscard]] double cardinal_sum(std::span<const double> samples, const SincGrid& grid, double x);

}  // namespace desinc
