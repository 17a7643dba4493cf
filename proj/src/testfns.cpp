#include "desinc/testfns.hpp"

#include <cmath>

namespace desinc {

double f1(double t) noexcept
{
    const double r = std::hypot(t, 2.0);
    const double s = t >= 0.0 ? t + r : 4.0 / (r - t);  // t + sqrt(t^2 + 4) > 0
    // sinh(s/4) e^{-s} = e^{-3s/4} (1 - e^{-s/2}) / 2
    return 0.5 * std::exp(-0.75 * s) * -std::expm1(-0.5 * s);
}

double f2(double t) noexcept
{
    const double q = 0.5 * t;
    const double r = std::hypot(1.0, q);
    double exponent = 0.0;     // q + r
    double denominator = 0.0;  // r + 1 - q
    if (q >= 0.0) {
        exponent = q + r;
        denominator = 1.0 + 1.0 / (r + q);
    } else {
        exponent = 1.0 / (r - q);
        denominator = r + 1.0 - q;
    }
    return std::exp(-exponent) / denominator;
}

DecayParams preset(PresetKey key)
{
    const bool first = key.function == TestFunction::F1;
    switch (key.method) {
    case Method::T21:
        return DecayParams::make(1.5, 1.0, first ? 0.75 : 0.5);
    case Method::T22:
        return first ? DecayParams::make(3.0, 1.0, 1.5, 159.0, 5.73)
                     : DecayParams::make(3.0, 1.0, 1.0, 23.5, 1.92);
    case Method::T23:
        return first ? DecayParams::make(1.17, 1.0, 1.5, 34.0, 3.39)
                     : DecayParams::make(1.17, 1.0, 1.0, 11.3, 1.9);
    }
    return {};
}

RealFunction test_function(TestFunction id)
{
    if (id == TestFunction::F1) {
        return [](double t) { return f1(t); };
    }
    return [](double t) { return f2(t); };
}

TransformKind transform_for(Method method) noexcept
{
    switch (method) {
    case Method::T21:
        return TransformKind::SePsi5;
    case Method::T22:
        return TransformKind::SePsiTilde5;
    case Method::T23:
        return TransformKind::DePhi5;
    }
    return TransformKind::DePhi5;
}

bool has_bound(Method method) noexcept { return method != Method::T21; }

std::string_view to_string(TestFunction id) noexcept { return id == TestFunction::F1 ? "f1" : "f2"; }

std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::T21:
        return "t21";
    case Method::T22:
        return "t22";
    case Method::T23:
        return "t23";
    }
    return "unknown";
}

}  // namespace desinc
