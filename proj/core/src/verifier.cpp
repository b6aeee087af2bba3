#include "zoopt/verifier.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "zoopt/bounds.hpp"
#include "zoopt/csv.hpp"
#include "zoopt/error.hpp"
#include "zoopt/estimators.hpp"
#include "zoopt/optimizer.hpp"
#include "zoopt/stats.hpp"

namespace zoopt {

namespace {

std::string short_number(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << v;
  return os.str();
}

std::string describe_noise(const NoiseSpec& noise) {
  return to_string(noise.kind) + "@" + short_number(noise.delta);
}

std::string prefix(const char* check, const Problem& problem, Scheme scheme) {
  return std::string(check) + "/" + to_string(problem.kind) + "/" + to_string(scheme) +
         "/d=" + std::to_string(problem.dim);
}

}  // namespace

CheckReport check_unbiasedness(const Problem& problem, Scheme scheme, const Vector& x,
                               double gamma, const NoiseSpec& noise, std::size_t n,
                               std::uint64_t seed, NoisePairing pairing) {
  const auto target = problem.objective->smoothed_gradient(x, gamma, scheme);
  if (!target) {
    throw InvalidConfig("problem", to_string(problem.kind) +
                                       " has no closed-form smoothed gradient");
  }
  if (n < 2) throw InvalidConfig("n", "Monte Carlo needs at least 2 samples");

  NoisyOracle oracle(problem.objective, noise);
  EstimatorConfig cfg;
  cfg.scheme = scheme;
  cfg.gamma = gamma;
  cfg.pairing = pairing;
  EstimatorRng rng(seed, 0);
  VectorAccumulator acc(problem.dim);
  for (std::size_t i = 0; i < n; ++i) acc.add(grad_est(oracle, x, cfg, rng));
  const VectorSummary s = acc.summary();

  double worst = 0.0;
  bool pass = true;
  for (Eigen::Index i = 0; i < s.mean.size(); ++i) {
    const double diff = std::abs(s.mean[i] - (*target)[i]);
    const double slack = 1e-12 * (1.0 + std::abs((*target)[i]));
    if (diff > kCheckSigmas * s.std_error[i] + slack) pass = false;
    const double z = s.std_error[i] > 0.0 ? diff / s.std_error[i]
                                          : (diff > slack ? std::numeric_limits<double>::infinity() : 0.0);
    worst = std::max(worst, z);
  }

  CheckReport report;
  report.name = prefix("unbiasedness", problem, scheme) + "/" + describe_noise(noise) + "/" +
                to_string(pairing);
  report.pass = pass;
  report.observed = worst;
  report.bound = kCheckSigmas;
  report.ci_halfwidth = s.ci_halfwidth.maxCoeff();
  report.n = n;
  report.seed = seed;
  return report;
}

CheckReport check_variance_bound(const Problem& problem, Scheme scheme, int p,
                                 const Vector& x, double gamma, const NoiseSpec& noise,
                                 std::size_t n, std::uint64_t seed,
                                 std::optional<double> claimed_delta) {
  if (n < 2) throw InvalidConfig("n", "Monte Carlo needs at least 2 samples");
  NoisyOracle oracle(problem.objective, noise);
  EstimatorConfig cfg;
  cfg.scheme = scheme;
  cfg.gamma = gamma;
  cfg.p = p;
  cfg.validate();
  EstimatorRng rng(seed, 0);
  VectorAccumulator acc(problem.dim, cfg.q());
  for (std::size_t i = 0; i < n; ++i) acc.add(grad_est(oracle, x, cfg, rng));
  const VectorSummary s = acc.summary();

  const double delta = claimed_delta.value_or(noise.delta);
  CheckReport report;
  report.name = prefix("variance", problem, scheme) + "/p=" + std::to_string(p) + "/" +
                describe_noise(noise) + (claimed_delta ? "/claimed=" + short_number(delta) : "");
  report.observed = s.sq_norm.mean;
  report.bound = variance_bound(scheme, p, problem.dim, problem.m2, delta, gamma);
  report.pass = report.observed <= report.bound + kCheckSigmas * s.sq_norm.std_error;
  report.ci_halfwidth = s.sq_norm.ci_halfwidth;
  report.n = n;
  report.seed = seed;
  return report;
}

CheckReport check_sandwich(const Problem& problem, Scheme scheme, Setting setting,
                           const Vector& x, double gamma, std::size_t n, std::uint64_t seed) {
  double constant = problem.m2;
  if (setting == Setting::Smooth) {
    if (!problem.grad_lipschitz) {
      throw InvalidConfig("setting", to_string(problem.kind) + " is not a smooth problem");
    }
    constant = *problem.grad_lipschitz;
  }
  RngStream rng(seed, 0);
  const auto mean_fn = [&problem](const Vector& y) { return problem.mean_value(y); };
  const ScalarSummary s = smoothed_value_mc(mean_fn, x, gamma, scheme, n, rng);

  CheckReport report;
  std::ostringstream detail;
  detail << "/gamma=" << gamma << "/dist=" << std::setprecision(3)
         << (x - problem.minimizer).norm();
  report.name = prefix("sandwich", problem, scheme) + "/" + to_string(setting) + detail.str();
  report.observed = s.mean - problem.mean_value(x);
  report.bound = smoothing_bias_bound(scheme, setting, constant, gamma, problem.dim);
  report.ci_halfwidth = s.ci_halfwidth;
  report.pass = report.observed >= -s.ci_halfwidth &&
                report.observed <= report.bound + s.ci_halfwidth;
  report.n = n;
  report.seed = seed;
  return report;
}

namespace {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(const SuiteOptions& opts) : opts_(opts) {}

  template <typename Fn>
  void add(std::string group, Expectation expect, Fn&& fn) {
    const std::uint64_t seed = opts_.seed + checks_.size();
    CheckSpec spec;
    spec.group = std::move(group);
    spec.expect = expect;
    spec.run = [fn = std::forward<Fn>(fn), seed]() { return fn(seed); };
    checks_.push_back(std::move(spec));
  }

  std::vector<CheckSpec> take() { return std::move(checks_); }
  const SuiteOptions& opts() const { return opts_; }

 private:
  SuiteOptions opts_;
  std::vector<CheckSpec> checks_;
};

constexpr double kUnbiasedGamma = 0.1;
constexpr double kVarianceGamma = 0.1;

NoiseSpec at_threshold(NoiseKind kind, Scheme scheme, const Problem& problem, double gamma) {
  return {kind, max_noise_level(scheme, Setting::Nonsmooth, problem.m2, gamma, problem.dim, 1.0)};
}

// Broken configurations; `expect` is Fail inside the default suite and Pass
// in the negative-control suite.
void add_negative_controls(SuiteBuilder& b, Expectation expect) {
  const SuiteOptions& o = b.opts();
  for (Scheme scheme : {Scheme::L1, Scheme::L2}) {
    b.add("unbiasedness", expect, [scheme, n = o.unbiased_n](std::uint64_t seed) {
      const Problem problem = make_problem(ProblemKind::SmoothQuadratic, 8);
      const NoiseSpec noise = at_threshold(NoiseKind::Gaussian, scheme, problem, kUnbiasedGamma);
      return check_unbiasedness(problem, scheme, problem.start, kUnbiasedGamma, noise, n, seed,
                                NoisePairing::DirectionCorrelated);
    });
  }
  b.add("variance", expect, [n = o.variance_n](std::uint64_t seed) {
    const Problem problem = make_problem(ProblemKind::NonsmoothNorm, 4);
    const double delta = 10.0 * problem.m2 * kVarianceGamma / 4.0;
    return check_variance_bound(problem, Scheme::L2, 2, problem.start, kVarianceGamma,
                                {NoiseKind::Gaussian, delta}, n, seed, delta / 100.0);
  });
}

}  // namespace

std::vector<CheckSpec> default_suite(const SuiteOptions& opts) {
  SuiteBuilder b(opts);

  for (Scheme scheme : {Scheme::L1, Scheme::L2}) {
    for (NoiseKind kind : {NoiseKind::None, NoiseKind::Uniform, NoiseKind::Gaussian,
                           NoiseKind::Rademacher, NoiseKind::ConstantBias}) {
      b.add("unbiasedness", Expectation::Pass, [scheme, kind, n = opts.unbiased_n](auto seed) {
        const Problem problem = make_problem(ProblemKind::SmoothQuadratic, 8);
        NoiseSpec noise = at_threshold(kind, scheme, problem, kUnbiasedGamma);
        if (kind == NoiseKind::None) noise.delta = 0.0;
        return check_unbiasedness(problem, scheme, problem.start, kUnbiasedGamma, noise, n, seed);
      });
    }
    b.add("unbiasedness", Expectation::Pass, [scheme, n = opts.unbiased_n](auto seed) {
      ProblemParams params;
      Vector c(8);
      c << 1, -2, 0.5, 0, 3, -1, 2, -0.5;
      params.linear_coeffs = c;
      const Problem problem = make_problem(ProblemKind::Linear, 8, params);
      return check_unbiasedness(problem, scheme, problem.start, kUnbiasedGamma, {}, n, seed);
    });
  }

  for (Scheme scheme : {Scheme::L1, Scheme::L2}) {
    for (std::size_t d : {2, 8, 32}) {
      for (bool noisy : {false, true}) {
        b.add("variance", Expectation::Pass, [scheme, d, noisy, n = opts.variance_n](auto seed) {
          const Problem problem = make_problem(ProblemKind::NonsmoothNorm, d);
          NoiseSpec noise{NoiseKind::Gaussian, 0.0};
          if (noisy) noise = at_threshold(NoiseKind::Gaussian, scheme, problem, kVarianceGamma);
          return check_variance_bound(problem, scheme, 2, problem.start, kVarianceGamma, noise,
                                      n, seed);
        });
      }
    }
  }
  // q = infinity cell for the l1 scheme
  b.add("variance", Expectation::Pass, [n = opts.variance_n](auto seed) {
    const Problem problem = make_problem(ProblemKind::NonsmoothNorm, 8);
    const NoiseSpec noise = at_threshold(NoiseKind::Uniform, Scheme::L1, problem, kVarianceGamma);
    return check_variance_bound(problem, Scheme::L1, 1, problem.start, kVarianceGamma, noise, n,
                                seed);
  });

  for (Scheme scheme : {Scheme::L1, Scheme::L2}) {
    for (std::size_t d : {2, 16}) {
      for (bool at_minimizer : {true, false}) {
        b.add("sandwich", Expectation::Pass,
              [scheme, d, at_minimizer, n = opts.sandwich_n](auto seed) {
                const Problem problem = make_problem(ProblemKind::NonsmoothNorm, d);
                const Vector& x = at_minimizer ? problem.minimizer : problem.start;
                return check_sandwich(problem, scheme, Setting::Nonsmooth, x, 0.2, n, seed);
              });
      }
      b.add("sandwich", Expectation::Pass, [scheme, d, n = opts.sandwich_n](auto seed) {
        const Problem problem = make_problem(ProblemKind::SmoothQuadratic, d);
        return check_sandwich(problem, scheme, Setting::Smooth, problem.start, 0.5, n, seed);
      });
    }
    b.add("sandwich", Expectation::Pass, [scheme, n = opts.sandwich_n](auto seed) {
      const Problem problem = make_problem(ProblemKind::PiecewiseMax, 4);
      return check_sandwich(problem, scheme, Setting::Nonsmooth, problem.minimizer, 0.2, n, seed);
    });
  }

  add_negative_controls(b, Expectation::Fail);
  return b.take();
}

std::vector<CheckSpec> negative_control_suite(const SuiteOptions& opts) {
  SuiteBuilder b(opts);
  add_negative_controls(b, Expectation::Pass);
  return b.take();
}

std::vector<SuiteOutcome> run_suite(const std::vector<CheckSpec>& suite) {
  std::vector<SuiteOutcome> outcomes;
  outcomes.reserve(suite.size());
  for (const CheckSpec& spec : suite) {
    CheckReport report = spec.run();
    std::string name = spec.name.empty() ? report.name : spec.name;
    outcomes.push_back({std::move(name), spec.group, spec.expect, std::move(report)});
  }
  return outcomes;
}

bool suite_ok(const std::vector<SuiteOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    if (!o.as_expected()) return false;
  }
  return true;
}

void write_report_csv(std::ostream& out, const std::vector<SuiteOutcome>& outcomes) {
  out << "check,group,expect,pass,as_expected,observed,bound,ci_halfwidth,n,seed\n";
  for (const auto& o : outcomes) {
    const CheckReport& r = o.report;
    out << o.name << ',' << o.group << ',' << (o.expect == Expectation::Pass ? "pass" : "fail")
        << ',' << (r.pass ? 1 : 0) << ',' << (o.as_expected() ? 1 : 0) << ','
        << format_double(r.observed) << ',' << format_double(r.bound) << ','
        << format_double(r.ci_halfwidth) << ',' << r.n << ',' << r.seed << '\n';
  }
}

void write_report_summary(std::ostream& out, const std::vector<SuiteOutcome>& outcomes) {
  std::size_t good = 0;
  for (const auto& o : outcomes) {
    const CheckReport& r = o.report;
    good += o.as_expected() ? 1 : 0;
    out << (o.as_expected() ? "[ ok ] " : "[FAIL] ") << o.name << "  observed="
        << std::setprecision(6) << r.observed << " bound=" << r.bound
        << " ci=" << r.ci_halfwidth << " n=" << r.n
        << (o.expect == Expectation::Fail ? "  (negative control)" : "") << '\n';
  }
  out << good << "/" << outcomes.size() << " checks behaved as expected\n";
}

}  // namespace zoopt
