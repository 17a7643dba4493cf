#include "desinc/approximator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "desinc/error.hpp"

namespace desinc {

Approximant::Approximant(TransformKind kind, SincGrid grid, std::vector<double> samples, DecayParams params,
                         int n)
    : kind_(kind), grid_(grid), samples_(std::move(samples)), params_(std::move(params)), n_(n)
{
    grid_.validate();
    if (samples_.size() != static_cast<std::size_t>(grid_.size())) {
        throw ContractError("Approximant: sample count must be M + N + 1");
    }
    if (!std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); })) {
        throw ContractError("Approximant: samples must be finite");
    }
}

double Approximant::operator()(double t) const { return cardinal_sum(samples_, grid_, inverse(kind_, t)); }

SincGrid mesh_for(TransformKind kind, int n, const DecayParams& p)
{
    return is_double_exponential(kind) ? de_mesh(n, p) : se_mesh(n, p);
}

Approximant build(const RealFunction& f, TransformKind kind, const DecayParams& p, int n)
{
    const SincGrid grid = mesh_for(kind, n, p);
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(grid.size()));
    for (int k = -grid.M; k <= grid.N; ++k) {
        try {
            samples.push_back(transformed_sample(kind, f, grid.node(k)));
        } catch (const EvaluationError& e) {
            throw EvaluationError("build: non-finite sample at k = " + std::to_string(k) + " (" + e.what() + ")");
        }
    }
    return Approximant(kind, grid, std::move(samples), p, n);
}

double evaluate(const Approximant& a, double t) { return a(t); }

double max_error_on_grid(const Approximant& a, const RealFunction& f, std::span<const double> points)
{
    if (points.empty()) {
        throw DomainError("max_error_on_grid: evaluation grid is empty");
    }
    double worst = 0.0;
    for (const double t : points) {
        const double err = std::fabs(f(t) - a(t));
        if (std::isnan(err)) {
            return err;
        }
        worst = std::max(worst, err);
    }
    return worst;
}

}  // namespace desinc
