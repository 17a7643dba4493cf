#include "desinc/sinc.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "desinc/error.hpp"

namespace desinc {

void SincGrid::validate() const
{
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("SincGrid: mesh size h must be positive and finite");
    }
    if (M < 0 || N < 0) {
        throw DomainError("SincGrid: truncation numbers M, N must be nonnegative");
    }
}

double sin_pi(double v) noexcept
{
    // Every double with |v| >= 2^52 is an integer.
    if (std::fabs(v) >= 4503599627370496.0) {
        return 0.0;
    }
    const double n = std::nearbyint(v);
    const double r = v - n;  // exact, |r| <= 1/2
    if (r == 0.0) {
        return 0.0;
    }
    const double s = std::sin(std::numbers::pi * r);
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double sinc_basis(int k, double h, double x)
{
    if (!std::isfinite(x)) {
        throw DomainError("sinc_basis: x must be finite");
    }
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("sinc_basis: h must be positive and finite");
    }
    const double node = k * h;
    if (x == node) {
        return 1.0;
    }
    const double v = (x - node) / h;
    const double u = std::numbers::pi * v;
    if (std::fabs(u) < kSincSeriesThreshold) {
        return 1.0 - u * u / 6.0;
    }
    return sin_pi(v) / u;
}

double cardinal_sum(std::span<const double> samples, const SincGrid& grid, double x)
{
    grid.validate();
    if (samples.size() != static_cast<std::size_t>(grid.size())) {
        throw ContractError("cardinal_sum: expected " + std::to_string(grid.size()) +
                            " samples for k = -M..N, got " + std::to_string(samples.size()));
    }

    // Kahan-Babuska (Neumaier) accumulation.
    double sum = 0.0;
    double carry = 0.0;
    for (int k = -grid.M; k <= grid.N; ++k) {
        const double fk = samples[static_cast<std::size_t>(k + grid.M)];
        if (!std::isfinite(fk)) {
            throw ContractError("cardinal_sum: sample at k = " + std::to_string(k) + " is not finite");
        }
        const double term = fk * sinc_basis(k, grid.h, x);
        const double t = sum + term;
        if (std::fabs(sum) >= std::fabs(term)) {
            carry += (sum - t) + term;
        } else {
            carry += (term - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

}  // namespace desinc
