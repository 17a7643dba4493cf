#include "desinc/transforms.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "desinc/error.hpp"

namespace desinc {

namespace {

// Beyond this magnitude e^{-u} is below half an ulp of 1.
constexpr double kAsymptoticSwitch = 36.0;

// l - 1/l, i.e. 2 sinh(log l), with the limits at l = 0 and l = inf.
double two_sinh_log(double l) noexcept
{
    if (l == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return l - 1.0 / l;
}

// Positive root s of s - 1/s = t, i.e. s = t/2 + sqrt(1 + (t/2)^2), without
// cancellation for negative t.
double root_of_two_sinh_log(double t) noexcept
{
    const double half = 0.5 * t;
    const double r = std::hypot(1.0, half);
    return half >= 0.0 ? half + r : 1.0 / (r - half);
}

double arsinh_exp(double x) noexcept
{
    if (x > kAsymptoticSwitch) {
        return x + std::numbers::ln2;
    }
    return std::asinh(std::exp(x));
}

// log(sinh v) for v > 0.
double log_sinh(double v) noexcept
{
    if (v > kAsymptoticSwitch) {
        return v - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * v));
    }
    return std::log(std::sinh(v));
}

void require_finite(double value, const char* what)
{
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << what << ": argument must be finite, got " << value;
        throw DomainError(msg.str());
    }
}

}  // namespace

std::string_view to_string(TransformKind kind) noexcept
{
    switch (kind) {
    case TransformKind::SePsi5:
        return "psi5";
    case TransformKind::SePsiTilde5:
        return "psi5_tilde";
    case TransformKind::DePhi5:
        return "phi5";
    }
    return "unknown";
}

double log1p_exp(double u) noexcept
{
    if (u > kAsymptoticSwitch) {
        return u + std::log1p(std::exp(-u));
    }
    if (u < -kAsymptoticSwitch) {
        return std::exp(u);
    }
    return std::log1p(std::exp(u));
}

double log_expm1(double s) noexcept
{
    if (s > kAsymptoticSwitch) {
        return s + std::log1p(-std::exp(-s));
    }
    if (s < 1e-8) {
        // e^s - 1 = s (1 + s/2 + s^2/6 + ...)
        return std::log(s) + std::log1p(s * (0.5 + s / 6.0));
    }
    return std::log(std::expm1(s));
}

double forward(TransformKind kind, double x)
{
    require_finite(x, "forward");
    switch (kind) {
    case TransformKind::SePsi5: {
        const double a = arsinh_exp(x);
        if (a == 0.0) {
            return -std::numeric_limits<double>::infinity();
        }
        return 0.5 * (a - 1.0 / a);
    }
    case TransformKind::SePsiTilde5:
        return two_sinh_log(log1p_exp(x));
    case TransformKind::DePhi5:
        return two_sinh_log(log1p_exp(std::numbers::pi * std::sinh(x)));
    }
    throw DomainError("forward: unknown transform kind");
}

double inverse(TransformKind kind, double t)
{
    require_finite(t, "inverse");
    switch (kind) {
    case TransformKind::SePsi5: {
        // t = (a - 1/a)/2 with a = arsinh(e^x), so a = t + sqrt(t^2 + 1).
        const double r = std::hypot(t, 1.0);
        const double a = t >= 0.0 ? t + r : 1.0 / (r - t);
        return log_sinh(a);
    }
    case TransformKind::SePsiTilde5:
        return log_expm1(root_of_two_sinh_log(t));
    case TransformKind::DePhi5:
        return std::asinh(log_expm1(root_of_two_sinh_log(t)) / std::numbers::pi);
    }
    throw DomainError("inverse: unknown transform kind");
}

double transformed_sample(TransformKind kind, const RealFunction& f, double x)
{
    const double t = forward(kind, x);
    if (std::isinf(t)) {
        return 0.0;
    }
    const double value = f(t);
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "transformed_sample: f(" << t << ") = " << value << " at x = " << x;
        throw EvaluationError(msg.str());
    }
    return value;
}

}  // namespace desinc
