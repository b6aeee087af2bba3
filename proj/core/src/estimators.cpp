#include "zoopt/estimators.hpp"

#include <cmath>

#include "zoopt/error.hpp"
#include "zoopt/sampling.hpp"

namespace zoopt {

void EstimatorConfig::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidConfig("gamma", "smoothing parameter must be > 0");
  }
  if (batch < 1) throw InvalidConfig("batch", "batch size must be >= 1");
  if (p != 1 && p != 2) throw InvalidConfig("p", "norm exponent must be 1 or 2");
}

EstimatorRng::EstimatorRng(std::uint64_t seed, std::uint64_t stream_id)
    : EstimatorRng(RngStream(seed, stream_id)) {}

EstimatorRng::EstimatorRng(const RngStream& parent)
    : direction(parent.split(1)), xi(parent.split(2)), noise(parent.split(3)) {}

namespace {

struct NoisePair {
  double forward;
  double backward;
};

NoisePair draw_pair(const NoiseSpec& spec, NoisePairing pairing, const Vector& e,
                    RngStream& rng) {
  switch (pairing) {
    case NoisePairing::Independent: {
      const double first = draw_noise(spec, rng);
      return {first, draw_noise(spec, rng)};
    }
    case NoisePairing::Shared: {
      const double shared = draw_noise(spec, rng);
      return {shared, shared};
    }
    case NoisePairing::DirectionCorrelated: {
      const double magnitude = std::abs(draw_noise(spec, rng));
      const double s = e[0] >= 0.0 ? 1.0 : -1.0;
      return {magnitude * s, -magnitude * s};
    }
  }
  return {0.0, 0.0};
}

}  // namespace

Vector two_point_estimate(NoisyOracle& oracle, const Vector& x, const Vector& e,
                          const EstimatorConfig& cfg, EstimatorRng& rng) {
  cfg.validate();
  const auto d = static_cast<double>(x.size());
  const StochasticObjective& objective = oracle.objective();

  const Vector xi_forward = objective.sample_xi(rng.xi);
  const Vector xi_backward = cfg.shared_xi ? xi_forward : objective.sample_xi(rng.xi);
  const NoisePair noise = draw_pair(oracle.noise(), cfg.pairing, e, rng.noise);

  const double forward = oracle.query_at(x + cfg.gamma * e, xi_forward, noise.forward);
  const double backward = oracle.query_at(x - cfg.gamma * e, xi_backward, noise.backward);
  const double scale = d / (2.0 * cfg.gamma) * (forward - backward);

  if (cfg.scheme == Scheme::L1) return scale * sign(e);
  return scale * e;
}

Vector grad_est_l1(NoisyOracle& oracle, const Vector& x, const EstimatorConfig& cfg,
                   EstimatorRng& rng) {
  if (cfg.scheme != Scheme::L1) throw InvalidConfig("scheme", "grad_est_l1 needs scheme L1");
  cfg.validate();
  const Vector e = sample_sphere_l1(static_cast<std::size_t>(x.size()), rng.direction);
  return two_point_estimate(oracle, x, e, cfg, rng);
}

Vector grad_est_l2(NoisyOracle& oracle, const Vector& x, const EstimatorConfig& cfg,
                   EstimatorRng& rng) {
  if (cfg.scheme != Scheme::L2) throw InvalidConfig("scheme", "grad_est_l2 needs scheme L2");
  cfg.validate();
  const Vector e = sample_sphere_l2(static_cast<std::size_t>(x.size()), rng.direction);
  return two_point_estimate(oracle, x, e, cfg, rng);
}

Vector grad_est(NoisyOracle& oracle, const Vector& x, const EstimatorConfig& cfg,
                EstimatorRng& rng) {
  return cfg.scheme == Scheme::L1 ? grad_est_l1(oracle, x, cfg, rng)
                                  : grad_est_l2(oracle, x, cfg, rng);
}

Vector batch_grad(NoisyOracle& oracle, const Vector& x, const EstimatorConfig& cfg,
                  EstimatorRng& rng) {
  cfg.validate();
  Vector sum = grad_est(oracle, x, cfg, rng);
  for (std::size_t b = 1; b < cfg.batch; ++b) sum += grad_est(oracle, x, cfg, rng);
  return sum / static_cast<double>(cfg.batch);
}

namespace {

template <typename Eval>
ScalarSummary smoothed_mc(Eval&& eval, const Vector& x, double gamma, Scheme scheme,
                          std::size_t n, RngStream& rng) {
  if (n < 2) throw InvalidConfig("n", "Monte Carlo needs at least 2 samples");
  if (!(gamma >= 0.0)) throw InvalidConfig("gamma", "smoothing parameter must be >= 0");
  const auto d = static_cast<std::size_t>(x.size());
  ScalarAccumulator acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (gamma == 0.0) {
      acc.add(eval(x, rng));
    } else {
      const Vector u = sample_ball(scheme, d, rng);
      acc.add(eval(x + gamma * u, rng));
    }
  }
  return acc.summary();
}

}  // namespace

ScalarSummary smoothed_value_mc(const StochasticObjective& objective, const Vector& x,
                                double gamma, Scheme scheme, std::size_t n, RngStream& rng) {
  return smoothed_mc(
      [&objective](const Vector& y, RngStream& r) {
        return objective.value(y, objective.sample_xi(r));
      },
      x, gamma, scheme, n, rng);
}

ScalarSummary smoothed_value_mc(const std::function<double(const Vector&)>& f,
                                const Vector& x, double gamma, Scheme scheme,
                                std::size_t n, RngStream& rng) {
  return smoothed_mc([&f](const Vector& y, RngStream&) { return f(y); }, x, gamma, scheme,
                     n, rng);
}

}  // namespace zoopt
