#include "desinc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "desinc/error.hpp"
#include "desinc/transforms.hpp"

namespace desinc {

namespace {

using std::numbers::e;
using std::numbers::pi;

constexpr double kLog2 = std::numbers::ln2;

void require_constants(const DecayParams& p, const char* what)
{
    if (!p.has_constants()) {
        throw ContractError(std::string(what) + ": K- and K+ are required to compute a bound");
    }
}

void require_positive_n(int n, const char* what)
{
    if (n < 1) {
        throw DomainError(std::string(what) + ": n must be at least 1");
    }
}

}  // namespace

ErrorBound se_bound(const DecayParams& p, int n)
{
    p.validate();
    require_positive_n(n, "se_bound");
    require_constants(p, "se_bound");
    if (!(p.d < pi)) {
        std::ostringstream msg;
        msg << "se_bound: d = " << p.d << " violates 0 < d < pi";
        throw RegimeError(msg.str());
    }

    const double km = *p.k_minus;
    const double kp = *p.k_plus;
    const double a = p.alpha;
    const double b = p.beta;
    const double cos_half = std::cos(p.d / 2.0);

    const double c_disc = (km / a) * std::pow(e / ((1.0 - kLog2) * (e - 1.0) * cos_half), a) +
                          (kp / b) * std::pow(std::exp(1.0 / kLog2) / cos_half, b);
    const double c_trunc = (km / a) * std::pow(1.0 / (1.0 - kLog2), a) +
                           (kp / b) * std::pow(std::exp(1.0 / kLog2), b);

    const double pdm = pi * p.d * p.mu;
    const double constant = 2.0 * c_disc / (pi * p.d * (1.0 - std::exp(-2.0 * std::sqrt(pdm)))) +
                            c_trunc * std::sqrt(p.mu / (pi * p.d));

    ErrorBound bound;
    bound.theorem = BoundTheorem::SePsiTilde5;
    bound.n = n;
    bound.constant_part = constant;
    bound.bound_value = constant * std::sqrt(static_cast<double>(n)) * std::exp(-std::sqrt(pdm * n));
    bound.components = {c_disc, c_trunc, 0.0};
    return bound;
}

ErrorBound de_bound(const DecayParams& p, int n)
{
    p.validate();
    require_positive_n(n, "de_bound");
    require_constants(p, "de_bound");
    if (auto violation = de_regime_violation(p, n)) {
        throw RegimeError("de_bound: " + *violation);
    }

    const ThresholdGeometry g = threshold_holds(p.d, kDeStripL).geometry;
    const double km = *p.k_minus;
    const double kp = *p.k_plus;
    const double a = p.alpha;
    const double b = p.beta;

    const double c_disc =
        (km / a) * std::pow((e * e + e + 1.0) / ((1.0 - kLog2) * (e * e - 1.0) * std::cos(g.c_d)), a) +
        (kp / b) * std::pow(std::exp(1.0 / kLog2) / std::cos((pi / 2) * std::sin(p.d)), b);
    const double c_trunc = km * std::pow(std::exp(pi / 2) / (1.0 - kLog2), a) +
                           kp * std::pow(std::exp((pi / 2) + (1.0 / kLog2)), b);

    const double constant =
        (1.0 / (pi * p.d)) *
        (2.0 * c_disc / (pi * (1.0 - std::exp(-pi * p.mu * e)) * std::cos(p.d)) + c_trunc);

    ErrorBound bound;
    bound.theorem = BoundTheorem::DePhi5;
    bound.n = n;
    bound.constant_part = constant;
    bound.bound_value = constant * std::exp(-pi * p.d * n / std::log(2.0 * p.d * n / p.mu));
    bound.components = {c_disc, c_trunc, g.c_d};
    return bound;
}

double LemmaMargin::min_margin() const noexcept
{
    double m = log_over_exp;
    if (right_half) m = std::min(m, *right_half);
    if (left_half) m = std::min(m, *left_half);
    return m;
}

std::vector<LemmaMargin> lemma_margins(std::span<const double> xs)
{
    std::vector<LemmaMargin> out;
    out.reserve(xs.size());
    for (const double x : xs) {
        const double u = pi * std::sinh(x);
        const double l = log1p_exp(u);
        const double y = std::exp(u);
        // l (1 + e^u)/e^u = l + l/y, with l/y -> 1 as y -> 0 and -> 0 as y -> inf.
        double l_over_y = 1.0;
        if (std::isinf(y)) {
            l_over_y = 0.0;
        } else if (y > 0.0) {
            l_over_y = l / y;
        }
        const double ratio = (l + l_over_y) / (1.0 + l);

        LemmaMargin m;
        m.x = x;
        m.log_over_exp = 1.0 - std::fabs(ratio);
        if (x >= 0.0) {
            m.right_half = 1.0 / kLog2 - 1.0 / l;
        }
        if (x <= 0.0) {
            m.left_half = 1.0 / (1.0 - kLog2) - 1.0 / std::fabs(-1.0 + l);
        }
        out.push_back(m);
    }
    return out;
}

}  // namespace desinc
