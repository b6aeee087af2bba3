#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zoopt/estimators.hpp"
#include "zoopt/noise.hpp"
#include "zoopt/problems.hpp"
#include "zoopt/types.hpp"

namespace zoopt {

/// Smoothing radius for target accuracy epsilon.
///   nonsmooth: L1 sqrt(d) eps / (2 M2),   L2 eps / (2 M2)
///   smooth:    L1 sqrt(d eps) / (2 L),    L2 sqrt(eps / 2) / L
/// The smoothing bias bound then equals eps / 2, except for L1 nonsmooth where
/// 2 gamma M2 / sqrt(d) comes to eps.
/// `m2_or_l` is M2 (nonsmooth) or L (smooth). Nonpositive inputs throw InvalidConfig.
double gamma_for_target(Scheme scheme, Setting setting, double epsilon, double m2_or_l,
                        std::size_t d);

/// Largest noise level whose term in the second-moment bound does not exceed
/// the noiseless term:
///   L1: sqrt(12) (1 + sqrt2) M2 gamma / d
///   L2: 2^{1/4} M2 gamma / sqrt(d)
/// In the smooth setting only the order sqrt(eps / d) is known; it is returned
/// with unit constant. gamma = 0 gives 0; negative gamma or (smooth) nonpositive
/// epsilon throw InvalidConfig.
double max_noise_level(Scheme scheme, Setting setting, double m2, double gamma,
                       std::size_t d, double epsilon);

enum class StepRule {
  ConstantInvL,      ///< 1 / L_fgamma
  DecreasingRSigma,  ///< R / (sigma sqrt(N)), the averaged-SGD step for horizon N
};

std::string to_string(StepRule r);
StepRule parse_step_rule(std::string_view text);

/// Step size for iteration k. The R/sigma rule depends on the horizon N only.
/// Throws InvalidConfig for nonpositive constants or N = 0 with DecreasingRSigma.
double step_size(StepRule rule, double l_fgamma, double sigma2, double r, std::size_t n,
                 std::size_t k);

/// ceil(c sigma2 R^2 / eps^2): iterations for averaged SGD to reach eps / 2
/// optimisation error with the R/sigma step.
std::size_t iteration_budget(double sigma2, double r, double epsilon, double c = 4.0);

struct RunConfig {
  double epsilon = 0.05;
  std::size_t iterations = 0;  ///< N
  StepRule step_rule = StepRule::DecreasingRSigma;
  std::uint64_t seed = 1;
  Setting setting = Setting::Nonsmooth;
  /// Called with (k, x_k) for every iterate including x_0.
  std::function<void(std::size_t, const Vector&)> observer;

  void validate() const;
};

/// Estimator settings with gamma chosen by gamma_for_target for the problem.
EstimatorConfig estimator_for_target(const Problem& problem, Scheme scheme, Setting setting,
                                     double epsilon, int p = 2, std::size_t batch = 1);

struct Trace {
  /// f(xbar_k) - f* for the running average xbar_k of x_0..x_k, k = 0..N.
  std::vector<double> gap;
  /// Cumulative oracle calls after iteration k (calls[0] = 0).
  std::vector<std::uint64_t> calls;
  Vector final_point;  ///< xbar_N
  Vector last_iterate;
  double gamma = 0.0;
  double step = 0.0;
  double sigma2 = 0.0;  ///< second-moment bound used by the step rule

  double final_gap() const { return gap.back(); }
  std::uint64_t oracle_calls() const { return calls.back(); }
  /// Calls spent when the averaged gap first drops to <= eps.
  std::optional<std::uint64_t> calls_to_reach(double eps) const;
};

/// Projected stochastic gradient descent driven by batched two-point
/// estimates, with Polyak-Ruppert averaging:
///   x_{k+1} = P_Q(x_k - eta * batch_grad(x_k)).
///
/// The step uses sigma2 = variance_bound(scheme, p, d, M2, noise.delta, gamma) / B.
/// Every iterate stays in Q, so every query x_k +- gamma e lies in Q + B_p(gamma).
Trace run(const Problem& problem, const RunConfig& rcfg, const EstimatorConfig& ecfg,
          const NoiseSpec& noise);

}  // namespace zoopt
