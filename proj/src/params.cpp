#include "desinc/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "desinc/error.hpp"

namespace desinc {

namespace {

bool positive_finite(double v) noexcept { return v > 0.0 && std::isfinite(v); }

void require_positive_n(int n, const char* what)
{
    if (n < 1) {
        throw DomainError(std::string(what) + ": n must be at least 1, got " + std::to_string(n));
    }
}

}  // namespace

void DecayParams::validate() const
{
    if (!positive_finite(d)) throw DomainError("DecayParams: d must be positive");
    if (!positive_finite(alpha)) throw DomainError("DecayParams: alpha must be positive");
    if (!positive_finite(beta)) throw DomainError("DecayParams: beta must be positive");
    if (k_minus && !positive_finite(*k_minus)) throw DomainError("DecayParams: K- must be positive");
    if (k_plus && !positive_finite(*k_plus)) throw DomainError("DecayParams: K+ must be positive");
    if (mu != std::min(alpha, beta)) throw DomainError("DecayParams: mu must equal min(alpha, beta)");
}

DecayParams DecayParams::make(double d, double alpha, double beta, std::optional<double> k_minus,
                              std::optional<double> k_plus)
{
    DecayParams p{d, alpha, beta, k_minus, k_plus, std::min(alpha, beta)};
    p.validate();
    return p;
}

SincGrid se_mesh(int n, const DecayParams& p)
{
    require_positive_n(n, "se_mesh");
    p.validate();
    SincGrid grid;
    grid.M = static_cast<int>(std::ceil(p.mu / p.alpha * n));
    grid.N = static_cast<int>(std::ceil(p.mu / p.beta * n));
    grid.h = std::sqrt(std::numbers::pi * p.d / (p.mu * n));
    return grid;
}

SincGrid de_mesh(int n, const DecayParams& p)
{
    require_positive_n(n, "de_mesh");
    p.validate();
    const double ratio = 2.0 * p.d * n / p.mu;
    if (!(ratio > 1.0)) {
        std::ostringstream msg;
        msg << "de_mesh: requires 2 d n / mu > 1 (got " << ratio << " for n = " << n << ")";
        throw RegimeError(msg.str());
    }
    SincGrid grid;
    grid.h = std::log(ratio) / n;
    grid.M = n - static_cast<int>(std::floor(std::log(p.alpha / p.mu) / grid.h));
    grid.N = n - static_cast<int>(std::floor(std::log(p.beta / p.mu) / grid.h));
    return grid;
}

double d_upper_limit(double L)
{
    if (!positive_finite(L)) {
        throw DomainError("d_upper_limit: L must be positive");
    }
    const double q = 2.0 * std::numbers::pi / L;
    return std::acos(std::sqrt(2.0 / (1.0 + std::sqrt(1.0 + q * q))));
}

ThresholdCheck threshold_holds(double d, double L)
{
    if (!(d > 0.0 && d < std::numbers::pi / 2)) {
        throw DomainError("threshold_holds: d must lie in (0, pi/2)");
    }
    if (!positive_finite(L)) {
        throw DomainError("threshold_holds: L must be positive");
    }
    ThresholdCheck check;
    auto& g = check.geometry;
    g.L = L;
    g.d = d;
    g.r0 = std::asinh(L / (std::numbers::pi * std::cos(d)));
    g.r1 = std::log((1.0 + std::cos(d)) / std::sin(d));
    const double ch = std::cosh(g.r1 - g.r0);
    g.c_d = (std::numbers::pi / 2) / ch;
    check.lhs = (ch - 1.0 / (ch * ch)) * std::cosh(g.r0);
    check.holds = check.lhs <= std::sqrt(1.5);
    return check;
}

int min_n_for_bound(const DecayParams& p)
{
    p.validate();
    return std::max(1, static_cast<int>(std::ceil(p.mu * std::numbers::e / (2.0 * p.d))));
}

std::optional<std::string> de_regime_violation(const DecayParams& p, int n)
{
    p.validate();
    std::ostringstream msg;
    msg.precision(17);
    const double d_limit = d_upper_limit(kDeStripL);
    if (!(p.d < d_limit)) {
        msg << "d = " << p.d << " violates d < d_L = " << d_limit;
        return msg.str();
    }
    const ThresholdCheck check = threshold_holds(p.d, kDeStripL);
    if (!check.holds) {
        msg << "d = " << p.d << " violates the threshold condition ("
            << check.lhs << " > sqrt(3/2))";
        return msg.str();
    }
    const int n_min = min_n_for_bound(p);
    if (n < n_min) {
        msg << "n = " << n << " violates n >= mu e / (2 d) (needs n >= " << n_min << ")";
        return msg.str();
    }
    return std::nullopt;
}

}  // namespace desinc
