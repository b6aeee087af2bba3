#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "zoopt/noise.hpp"
#include "zoopt/oracle.hpp"
#include "zoopt/rng.hpp"
#include "zoopt/stats.hpp"
#include "zoopt/types.hpp"

namespace zoopt {

struct EstimatorConfig {
  Scheme scheme = Scheme::L2;
  double gamma = 0.1;  ///< smoothing radius
  std::size_t batch = 1;
  int p = 2;  ///< norm exponent of the Lipschitz assumption, 1 or 2
  NoisePairing pairing = NoisePairing::Independent;
  /// Use one xi draw for both evaluations of a two-point estimate.
  bool shared_xi = true;

  /// Dual exponent; kMaxNorm when p = 1.
  int q() const { return dual_exponent(p); }
  /// Throws InvalidConfig naming gamma, batch or p.
  void validate() const;
};

/// The three independent streams an estimator draws from. Directions, xi and
/// noise never share a stream, so the noise is independent of e by construction.
struct EstimatorRng {
  RngStream direction;
  RngStream xi;
  RngStream noise;

  EstimatorRng(std::uint64_t seed, std::uint64_t stream_id);
  /// Children 1, 2, 3 of `parent`.
  explicit EstimatorRng(const RngStream& parent);
};

/// (d / 2 gamma) (f_d1(x + gamma e, xi) - f_d2(x - gamma e, xi)) * w(e) with
/// w(e) = sign(e) for L1 and w(e) = e for L2, for a caller-supplied unit
/// direction `e`. Two oracle calls.
Vector two_point_estimate(NoisyOracle& oracle, const Vector& x, const Vector& e,
                          const EstimatorConfig& cfg, EstimatorRng& rng);

/// l1-randomised estimate: e uniform on the unit l1 sphere. Two oracle calls.
Vector grad_est_l1(NoisyOracle& oracle, const Vector& x, const EstimatorConfig& cfg,
                   EstimatorRng& rng);

/// l2-randomised estimate: e uniform on the unit l2 sphere. Two oracle calls.
Vector grad_est_l2(NoisyOracle& oracle, const Vector& x, const EstimatorConfig& cfg,
                   EstimatorRng& rng);

/// Dispatches on cfg.scheme.
Vector grad_est(NoisyOracle& oracle, const Vector& x, const EstimatorConfig& cfg,
                EstimatorRng& rng);

/// Mean of cfg.batch independent estimates; 2 * batch oracle calls.
Vector batch_grad(NoisyOracle& oracle, const Vector& x, const EstimatorConfig& cfg,
                  EstimatorRng& rng);

/// Monte Carlo estimate of the smoothed value E[f(x + gamma u, xi)] with u
/// uniform on the unit ball of `scheme`. xi and u are both drawn from `rng`.
/// gamma = 0 is allowed and gives plain sampling of f(x, xi).
ScalarSummary smoothed_value_mc(const StochasticObjective& objective, const Vector& x,
                                double gamma, Scheme scheme, std::size_t n, RngStream& rng);

/// Same, for a deterministic function (typically a closed-form mean objective).
ScalarSummary smoothed_value_mc(const std::function<double(const Vector&)>& f,
                                const Vector& x, double gamma, Scheme scheme,
                                std::size_t n, RngStream& rng);

}  // namespace zoopt
