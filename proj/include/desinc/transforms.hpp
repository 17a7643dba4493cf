#pragma once

#include <functional>
#include <string_view>

namespace desinc {

/// Variable transformations for functions decaying algebraically at -inf and
/// exponentially at +inf.
///
///   SePsi5       t = sinh(log(arsinh(e^x)))
///   SePsiTilde5  t = 2 sinh(log(log(1 + e^x)))
///   DePhi5       t = 2 sinh(log(log(1 + e^{pi sinh x})))
enum class TransformKind { SePsi5, SePsiTilde5, DePhi5 };

[[nodiscard]] constexpr bool is_double_exponential(TransformKind kind) noexcept
{
    return kind == TransformKind::DePhi5;
}

[[nodiscard]] std::string_view to_string(TransformKind kind) noexcept;

using RealFunction = std::function<double(double)>;

/// log(1 + e^u) without overflow for large u or loss of precision for very
/// negative u. Returns 0 when e^u underflows.
[[nodiscard]] double log1p_exp(double u) noexcept;

/// log(e^s - 1) for s > 0.
[[nodiscard]] double log_expm1(double s) noexcept;

/**
 * Forward map x -> t. Strictly increasing; returns -inf when the inner
 * log(1 + e^u) underflows and +inf when it overflows, never NaN for finite x.
 * Throws DomainError for non-finite x.
 */
[[nodiscard]] double forward(TransformKind kind, double x);

/// Inverse map t -> x. Throws DomainError for non-finite t.
[[nodiscard]] double inverse(TransformKind kind, double t);

/**
 * f(forward(kind, x)), with the limit value 0 when the transformed point is
 * -inf or +inf (f decays at both ends). Throws EvaluationError if f returns a
 * non-finite value at a finite argument.
 */
[[nodiscard]] double transformed_sample(TransformKind kind, const RealFunction& f, double x);

}  // namespace desinc
