#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>

#include "zoopt/noise.hpp"
#include "zoopt/rng.hpp"
#include "zoopt/types.hpp"

namespace zoopt {

/// A stochastic objective f(x, xi). The random parameter xi is drawn
/// separately from evaluation so that two evaluations can share one draw.
class StochasticObjective {
 public:
  virtual ~StochasticObjective() = default;

  virtual std::size_t dimension() const = 0;
  /// One draw of xi; may be empty for a deterministic objective.
  virtual Vector sample_xi(RngStream& rng) const = 0;
  virtual double value(const Vector& x, const Vector& xi) const = 0;
};

/// Objective assembled from callables; handy for tests and ad-hoc problems.
class FunctionObjective final : public StochasticObjective {
 public:
  using ValueFn = std::function<double(const Vector& x, const Vector& xi)>;
  using XiFn = std::function<Vector(RngStream&)>;

  FunctionObjective(std::size_t dim, ValueFn value, XiFn xi = {});

  /// Deterministic objective ignoring xi.
  static std::shared_ptr<FunctionObjective> deterministic(
      std::size_t dim, std::function<double(const Vector&)> f);

  std::size_t dimension() const override { return dim_; }
  Vector sample_xi(RngStream& rng) const override;
  double value(const Vector& x, const Vector& xi) const override { return value_(x, xi); }

 private:
  std::size_t dim_;
  ValueFn value_;
  XiFn xi_;
};

/// The gradient-free oracle: returns f(x, xi) + delta and meters every call.
///
/// The call counter is atomic, so concurrent estimators may share an oracle;
/// everything else is immutable after construction.
class NoisyOracle {
 public:
  NoisyOracle(std::shared_ptr<const StochasticObjective> objective, NoiseSpec noise);

  NoisyOracle(const NoisyOracle&) = delete;
  NoisyOracle& operator=(const NoisyOracle&) = delete;

  const StochasticObjective& objective() const noexcept { return *objective_; }
  const NoiseSpec& noise() const noexcept { return noise_; }
  std::size_t dimension() const noexcept { return objective_->dimension(); }

  /// Fresh xi from `xi_rng`, fresh delta from `noise_rng`; one call.
  double query(const Vector& x, RngStream& xi_rng, RngStream& noise_rng);
  /// Single-stream convenience: xi then delta from `rng`.
  double query(const Vector& x, RngStream& rng) { return query(x, rng, rng); }
  /// Evaluation with an externally drawn xi and delta; one call.
  /// Throws EvaluationError if f(x, xi) is not finite.
  double query_at(const Vector& x, const Vector& xi, double delta);

  std::uint64_t calls() const noexcept { return calls_.load(std::memory_order_relaxed); }
  void reset_counter() noexcept { calls_.store(0, std::memory_order_relaxed); }

 private:
  std::shared_ptr<const StochasticObjective> objective_;
  NoiseSpec noise_;
  std::atomic<std::uint64_t> calls_{0};
};

}  // namespace zoopt
