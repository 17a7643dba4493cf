#pragma once

#include <string_view>

#include "desinc/params.hpp"
#include "desinc/transforms.hpp"

namespace desinc {

/// sinh((t + sqrt(4 + t^2))/4) e^{-t - sqrt(t^2 + 4)}.
/// Decays like 1/(2|t|) as t -> -inf and like e^{-1.5 t}/2 as t -> +inf.
[[nodiscard]] double f1(double t) noexcept;

/// e^{-(t/2) - sqrt(1 + (t/2)^2)} / (sqrt(1 + (t/2)^2) + 1 - t/2).
/// Decays like 1/|t| as t -> -inf and like e^{-t} as t -> +inf.
[[nodiscard]] double f2(double t) noexcept;

enum class TestFunction { F1, F2 };

/// Approximation method: transformation, mesh rule and (if any) bound.
///   T21  psi5,       single-exponential mesh, no computable bound
///   T22  psi5-tilde, single-exponential mesh, se_bound
///   T23  phi5,       double-exponential mesh, de_bound
enum class Method { T21, T22, T23 };

struct PresetKey {
    TestFunction function = TestFunction::F1;
    Method method = Method::T23;
};

/// Published parameter sets for f1/f2. T21 entries carry no K constants.
[[nodiscard]] DecayParams preset(PresetKey key);

[[nodiscard]] RealFunction test_function(TestFunction id);
[[nodiscard]] TransformKind transform_for(Method method) noexcept;
[[nodiscard]] bool has_bound(Method method) noexcept;

[[nodiscard]] std::string_view to_string(TestFunction id) noexcept;
[[nodiscard]] std::string_view to_string(Method method) noexcept;

}  // namespace desinc
