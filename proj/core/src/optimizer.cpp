#include "zoopt/optimizer.hpp"

#include <cmath>

#include "zoopt/bounds.hpp"
#include "zoopt/error.hpp"

namespace zoopt {

namespace {
void require_positive(double v, const char* key) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidConfig(key, "must be finite and > 0");
}
}  // namespace

double gamma_for_target(Scheme scheme, Setting setting, double epsilon, double m2_or_l,
                        std::size_t d) {
  require_positive(epsilon, "epsilon");
  require_positive(m2_or_l, setting == Setting::Nonsmooth ? "M2" : "L");
  if (d == 0) throw InvalidDimension(d);
  const auto dd = static_cast<double>(d);
  if (setting == Setting::Nonsmooth) {
    return scheme == Scheme::L1 ? std::sqrt(dd) * epsilon / (2.0 * m2_or_l)
                                : epsilon / (2.0 * m2_or_l);
  }
  return scheme == Scheme::L1 ? std::sqrt(dd * epsilon) / (2.0 * m2_or_l)
                              : std::sqrt(epsilon / 2.0) / m2_or_l;
}

double max_noise_level(Scheme scheme, Setting setting, double m2, double gamma,
                       std::size_t d, double epsilon) {
  if (d == 0) throw InvalidDimension(d);
  const auto dd = static_cast<double>(d);
  if (setting == Setting::Smooth) {
    require_positive(epsilon, "epsilon");
    return std::sqrt(epsilon / dd);
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw InvalidConfig("gamma", "smoothing parameter must be >= 0");
  }
  if (m2 < 0.0) throw InvalidConfig("M2", "Lipschitz constant must be >= 0");
  // Solve noise term == noiseless term of the second-moment bound for delta.
  if (scheme == Scheme::L1) {
    return std::sqrt(12.0) * (1.0 + std::sqrt(2.0)) * m2 * gamma / dd;
  }
  return std::pow(2.0, 0.25) * m2 * gamma / std::sqrt(dd);
}

std::string to_string(StepRule r) {
  return r == StepRule::ConstantInvL ? "constant_inv_L" : "decreasing_R_sigma";
}

StepRule parse_step_rule(std::string_view text) {
  if (text == "constant_inv_L") return StepRule::ConstantInvL;
  if (text == "decreasing_R_sigma") return StepRule::DecreasingRSigma;
  throw InvalidConfig("step_rule", "unknown step rule '" + std::string(text) + "'");
}

double step_size(StepRule rule, double l_fgamma, double sigma2, double r, std::size_t n,
                 std::size_t /*k*/) {
  if (rule == StepRule::ConstantInvL) {
    require_positive(l_fgamma, "L_fgamma");
    return 1.0 / l_fgamma;
  }
  if (n == 0) throw InvalidConfig("iterations", "R/sigma step needs a horizon N >= 1");
  require_positive(sigma2, "sigma2");
  if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidConfig("R", "must be finite and >= 0");
  return r / (std::sqrt(sigma2) * std::sqrt(static_cast<double>(n)));
}

std::size_t iteration_budget(double sigma2, double r, double epsilon, double c) {
  require_positive(epsilon, "epsilon");
  if (sigma2 < 0.0 || r < 0.0 || c <= 0.0) {
    throw InvalidConfig("sigma2", "budget constants must be >= 0");
  }
  return static_cast<std::size_t>(std::ceil(c * sigma2 * r * r / (epsilon * epsilon)));
}

void RunConfig::validate() const { require_positive(epsilon, "epsilon"); }

EstimatorConfig estimator_for_target(const Problem& problem, Scheme scheme, Setting setting,
                                     double epsilon, int p, std::size_t batch) {
  double constant = problem.m2;
  if (setting == Setting::Smooth) {
    if (!problem.grad_lipschitz) {
      throw InvalidConfig("setting", to_string(problem.kind) + " is not a smooth problem");
    }
    constant = *problem.grad_lipschitz;
  }
  EstimatorConfig cfg;
  cfg.scheme = scheme;
  cfg.p = p;
  cfg.batch = batch;
  cfg.gamma = gamma_for_target(scheme, setting, epsilon, constant, problem.dim);
  cfg.validate();
  return cfg;
}

std::optional<std::uint64_t> Trace::calls_to_reach(double eps) const {
  for (std::size_t k = 0; k < gap.size(); ++k) {
    if (gap[k] <= eps) return calls[k];
  }
  return std::nullopt;
}

Trace run(const Problem& problem, const RunConfig& rcfg, const EstimatorConfig& ecfg,
          const NoiseSpec& noise) {
  rcfg.validate();
  ecfg.validate();
  noise.validate();
  if (!problem.feasible.contains(problem.start)) {
    throw InvalidConfig("start", "starting point lies outside the feasible set");
  }

  Trace trace;
  trace.gamma = ecfg.gamma;
  const std::size_t n = rcfg.iterations;
  const std::size_t d = problem.dim;
  const double m = problem.lipschitz(ecfg.p);
  trace.sigma2 = variance_bound(ecfg.scheme, ecfg.p, d, problem.m2, noise.delta, ecfg.gamma) /
                 static_cast<double>(ecfg.batch);

  Vector x = problem.start;
  Vector average = x;
  trace.gap.reserve(n + 1);
  trace.calls.reserve(n + 1);
  trace.gap.push_back(true_gap(problem, average));
  trace.calls.push_back(0);
  if (rcfg.observer) rcfg.observer(0, x);

  if (n > 0) {
    trace.step = step_size(rcfg.step_rule,
                           smoothing_lipschitz_grad(ecfg.scheme, m, ecfg.gamma, d),
                           trace.sigma2, problem.radius(ecfg.p), n, 0);
  }

  NoisyOracle oracle(problem.objective, noise);
  EstimatorRng rng(rcfg.seed, 0);
  for (std::size_t k = 0; k < n; ++k) {
    // Both step rules are constant over the horizon.
    const Vector g = batch_grad(oracle, x, ecfg, rng);
    x = problem.feasible.project(x - trace.step * g);
    average += (x - average) / static_cast<double>(k + 2);
    trace.gap.push_back(true_gap(problem, average));
    trace.calls.push_back(oracle.calls());
    if (rcfg.observer) rcfg.observer(k + 1, x);
  }
  trace.final_point = average;
  trace.last_iterate = x;
  return trace;
}

}  // namespace zoopt
