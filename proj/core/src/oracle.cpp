#include "zoopt/oracle.hpp"

#include <cmath>

#include "zoopt/error.hpp"

namespace zoopt {

FunctionObjective::FunctionObjective(std::size_t dim, ValueFn value, XiFn xi)
    : dim_(dim), value_(std::move(value)), xi_(std::move(xi)) {
  if (dim_ == 0) throw InvalidDimension(dim_);
}

std::shared_ptr<FunctionObjective> FunctionObjective::deterministic(
    std::size_t dim, std::function<double(const Vector&)> f) {
  return std::make_shared<FunctionObjective>(
      dim, [f = std::move(f)](const Vector& x, const Vector&) { return f(x); });
}

Vector FunctionObjective::sample_xi(RngStream& rng) const {
  return xi_ ? xi_(rng) : Vector();
}

NoisyOracle::NoisyOracle(std::shared_ptr<const StochasticObjective> objective,
                         NoiseSpec noise)
    : objective_(std::move(objective)), noise_(noise) {
  noise_.validate();
}

double NoisyOracle::query(const Vector& x, RngStream& xi_rng, RngStream& noise_rng) {
  const Vector xi = objective_->sample_xi(xi_rng);
  const double delta = draw_noise(noise_, noise_rng);
  return query_at(x, xi, delta);
}

double NoisyOracle::query_at(const Vector& x, const Vector& xi, double delta) {
  calls_.fetch_add(1, std::memory_order_relaxed);
  const double value = objective_->value(x, xi);
  if (!std::isfinite(value)) throw EvaluationError(x, value);
  return value + delta;
}

}  // namespace zoopt
