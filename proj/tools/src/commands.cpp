#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "zoopt/bounds.hpp"
#include "zoopt/csv.hpp"
#include "zoopt/error.hpp"
#include "zoopt/experiment.hpp"

namespace zoopt::experiment {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError(path.parent_path().string(), "cannot create directory: " + ec.message());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << content;
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

std::size_t scaled(std::size_t n, double scale) {
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(n * scale)));
}

CheckSpec make_check(const CheckConfig& c, std::uint64_t seed) {
  CheckSpec spec;
  spec.expect = c.expect;
  switch (c.type) {
    case CheckConfig::Type::Unbiasedness:
      spec.group = "unbiasedness";
      break;
    case CheckConfig::Type::Variance:
      spec.group = "variance";
      break;
    case CheckConfig::Type::Sandwich:
      spec.group = "sandwich";
      break;
  }
  spec.run = [c, seed]() {
    const Problem problem = make_problem(c.problem, c.d);
    const Vector& x = c.at_minimizer ? problem.minimizer : problem.start;
    switch (c.type) {
      case CheckConfig::Type::Unbiasedness:
        return check_unbiasedness(problem, c.scheme, x, c.gamma, c.noise, c.n, seed, c.pairing);
      case CheckConfig::Type::Variance:
        return check_variance_bound(problem, c.scheme, c.p, x, c.gamma, c.noise, c.n, seed,
                                    c.claimed_delta);
      case CheckConfig::Type::Sandwich:
        break;
    }
    return check_sandwich(problem, c.scheme, c.setting, x, c.gamma, c.n, seed);
  };
  return spec;
}

}  // namespace

Resolved resolve(const ExperimentConfig& cfg) {
  Problem problem = make_problem(cfg.problem, cfg.d, cfg.params);
  EstimatorConfig est;
  if (cfg.gamma) {
    est.scheme = cfg.scheme;
    est.p = cfg.p;
    est.batch = cfg.batch;
    est.gamma = *cfg.gamma;
  } else {
    est = estimator_for_target(problem, cfg.scheme, cfg.setting, cfg.epsilon, cfg.p, cfg.batch);
  }
  est.pairing = cfg.pairing;
  est.shared_xi = cfg.shared_xi;
  est.validate();

  const double delta_max =
      max_noise_level(cfg.scheme, cfg.setting, problem.m2, est.gamma, cfg.d, cfg.epsilon);
  std::size_t iterations = 0;
  if (cfg.iterations) {
    iterations = *cfg.iterations;
  } else {
    const double sigma2 =
        variance_bound(cfg.scheme, cfg.p, cfg.d, problem.m2, delta_max, est.gamma) /
        static_cast<double>(cfg.batch);
    iterations = iteration_budget(sigma2, problem.radius(cfg.p), cfg.epsilon, cfg.budget_constant);
  }
  return Resolved{std::move(problem), est, delta_max, iterations};
}

namespace {
RunConfig run_config(const ExperimentConfig& cfg, const Resolved& r, std::uint64_t seed) {
  RunConfig rc;
  rc.epsilon = cfg.epsilon;
  rc.iterations = r.iterations;
  rc.step_rule = cfg.step_rule;
  rc.seed = seed;
  rc.setting = cfg.setting;
  return rc;
}
}  // namespace

Trace single_run(const ExperimentConfig& cfg) {
  const Resolved r = resolve(cfg);
  const double delta = cfg.delta.value_or(cfg.delta_multiplier * r.delta_max);
  return run(r.problem, run_config(cfg, r, cfg.seed), r.estimator, {cfg.noise, delta});
}

std::vector<SweepRow> sweep(const ExperimentConfig& cfg) {
  const Resolved r = resolve(cfg);
  const std::vector<std::uint64_t> seeds = cfg.seed_list();

  std::vector<SweepRow> rows;
  for (double m : cfg.multipliers) {
    for (std::uint64_t seed : seeds) {
      SweepRow row{};
      row.run_id = rows.size();
      row.scheme = cfg.scheme;
      row.d = cfg.d;
      row.epsilon = cfg.epsilon;
      row.gamma = r.estimator.gamma;
      row.multiplier = m;
      row.delta = m * r.delta_max;
      row.seed = seed;
      rows.push_back(row);
    }
  }

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < rows.size(); i += stride) {
      SweepRow& row = rows[i];
      const Trace t =
          run(r.problem, run_config(cfg, r, row.seed), r.estimator, {cfg.noise, row.delta});
      row.final_gap = t.final_gap();
      row.oracle_calls = t.oracle_calls();
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::max<std::size_t>(cfg.workers, 1),
                                                    std::max<std::size_t>(rows.size(), 1));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, work, w, workers));
    }
    for (auto& j : jobs) j.get();
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "run_id,scheme,d,epsilon,gamma,delta,final_gap,oracle_calls\n";
  for (const auto& r : rows) {
    out << r.run_id << ',' << to_string(r.scheme) << ',' << r.d << ','
        << format_double(r.epsilon) << ',' << format_double(r.gamma) << ','
        << format_double(r.delta) << ',' << format_double(r.final_gap) << ','
        << r.oracle_calls << '\n';
  }
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
  out << "iter,gap,calls\n";
  for (std::size_t k = 0; k < trace.gap.size(); ++k) {
    out << k << ',' << format_double(trace.gap[k]) << ',' << trace.calls[k] << '\n';
  }
}

std::vector<CheckSpec> build_checks(const ExperimentConfig& cfg) {
  if (cfg.checks) {
    std::vector<CheckSpec> out;
    for (std::size_t i = 0; i < cfg.checks->size(); ++i) {
      out.push_back(make_check((*cfg.checks)[i], cfg.seed + i));
    }
    return out;
  }
  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.unbiased_n = scaled(opts.unbiased_n, cfg.mc_scale);
  opts.variance_n = scaled(opts.variance_n, cfg.mc_scale);
  opts.sandwich_n = scaled(opts.sandwich_n, cfg.mc_scale);
  return cfg.suite == "negative" ? negative_control_suite(opts) : default_suite(opts);
}

int cmd_verify(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
               std::ostream& log) {
  const auto outcomes = run_suite(build_checks(cfg));
  std::ostringstream csv;
  write_report_csv(csv, outcomes);
  const auto path = out_dir / "verify_report.csv";
  write_file(path, csv.str());
  write_report_summary(log, outcomes);
  log << "report: " << path.string() << '\n';
  return suite_ok(outcomes) ? 0 : 1;
}

int cmd_run(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
            std::ostream& log) {
  const Trace trace = single_run(cfg);
  std::ostringstream csv;
  write_trace_csv(csv, trace);
  const auto path = out_dir / "trace.csv";
  write_file(path, csv.str());
  log << "iterations " << trace.gap.size() - 1 << "  gamma " << trace.gamma << "  step "
      << trace.step << "  final gap " << trace.final_gap() << "  oracle calls "
      << trace.oracle_calls() << '\n'
      << "trace: " << path.string() << '\n';
  return 0;
}

int cmd_sweep(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
              std::ostream& log) {
  const auto rows = sweep(cfg);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  const auto path = out_dir / "sweep.csv";
  write_file(path, csv.str());
  log << rows.size() << " runs  ->  " << path.string() << '\n';
  return 0;
}

void print_constants(std::ostream& out, const ConstantsQuery& q) {
  const double constant = q.setting == Setting::Nonsmooth ? q.m2 : q.l;
  const double gamma =
      q.gamma.value_or(gamma_for_target(q.scheme, q.setting, q.epsilon, constant, q.d));
  const double delta_max = max_noise_level(q.scheme, q.setting, q.m2, gamma, q.d, q.epsilon);
  const int qexp = dual_exponent(q.p);

  out << std::setprecision(10);
  out << "scheme " << to_string(q.scheme) << "  setting " << to_string(q.setting) << "  p "
      << q.p << "  q " << (qexp == kMaxNorm ? std::string("inf") : std::to_string(qexp))
      << "  d " << q.d << "  epsilon " << q.epsilon << "  M2 " << q.m2;
  if (q.setting == Setting::Smooth) out << "  L " << q.l;
  out << '\n';
  out << "kappa                        " << kappa(q.scheme, q.p, q.d) << '\n';
  out << "gamma                        " << gamma << '\n';
  out << "max noise level              " << delta_max << '\n';
  out << "variance bound (delta=0)     " << variance_bound(q.scheme, q.p, q.d, q.m2, 0.0, gamma)
      << '\n';
  out << "variance bound (delta=max)   "
      << variance_bound(q.scheme, q.p, q.d, q.m2, delta_max, gamma) << '\n';
  out << "smoothing bias bound         "
      << smoothing_bias_bound(q.scheme, q.setting, constant, gamma, q.d) << '\n';
  out << "smoothed-gradient Lipschitz  " << smoothing_lipschitz_grad(q.scheme, q.m2, gamma, q.d)
      << '\n';
}

}  // namespace zoopt::experiment
