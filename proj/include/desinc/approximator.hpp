#pragma once

#include <span>
#include <vector>

#include "desinc/params.hpp"
#include "desinc/sinc.hpp"
#include "desinc/transforms.hpp"

namespace desinc {

/**
 * Transformed Sinc approximant
 *
 *   f(t) ~ sum_{k=-M}^{N} f(T(kh)) S(k,h)(T^{-1}(t))
 *
 * for a transformation T. Immutable once built, so concurrent evaluation is
 * safe.
 */
class Approximant {
public:
    Approximant(TransformKind kind, SincGrid grid, std::vector<double> samples, DecayParams params, int n);

    [[nodiscard]] TransformKind kind() const noexcept { return kind_; }
    [[nodiscard]] const SincGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] const DecayParams& params() const noexcept { return params_; }
    [[nodiscard]] int n() const noexcept { return n_; }

    /// Samples F(kh) indexed from k = -M.
    [[nodiscard]] std::span<const double> samples() const noexcept { return samples_; }
    [[nodiscard]] double sample(int k) const { return samples_.at(static_cast<std::size_t>(k + grid_.M)); }

    [[nodiscard]] double operator()(double t) const;

private:
    TransformKind kind_;
    SincGrid grid_;
    std::vector<double> samples_;
    DecayParams params_;
    int n_;
};

/// Mesh rule matching a transformation: double-exponential for phi5,
/// single-exponential otherwise.
[[nodiscard]] SincGrid mesh_for(TransformKind kind, int n, const DecayParams& p);

/// Samples f at the transformed nodes of mesh_for(kind, n, p). A non-finite
/// sample raises EvaluationError naming k.
[[nodiscard]] Approximant build(const RealFunction& f, TransformKind kind, const DecayParams& p, int n);

/// Cardinal sum at x = inverse(kind, t).
[[nodiscard]] double evaluate(const Approximant& a, double t);

/// max over `points` of |f(t) - a(t)|. Throws DomainError on an empty grid.
[[nodiscard]] double max_error_on_grid(const Approximant& a, const RealFunction& f, std::span<const double> points);

}  // namespace desinc
