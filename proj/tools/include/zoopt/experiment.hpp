#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zoopt/csv.hpp"
#include "zoopt/noise.hpp"
#include "zoopt/optimizer.hpp"
#include "zoopt/problems.hpp"
#include "zoopt/types.hpp"
#include "zoopt/verifier.hpp"

namespace zoopt::experiment {

/// One entry of an explicit `checks` list in a verify config.
struct CheckConfig {
  enum class Type { Unbiasedness, Variance, Sandwich };
  Type type = Type::Unbiasedness;
  ProblemKind problem = ProblemKind::SmoothQuadratic;
  std::size_t d = 4;
  Scheme scheme = Scheme::L2;
  Setting setting = Setting::Nonsmooth;
  int p = 2;
  double gamma = 0.1;
  NoiseSpec noise;
  NoisePairing pairing = NoisePairing::Independent;
  std::optional<double> claimed_delta;
  bool at_minimizer = false;  ///< evaluate at x* instead of x0
  std::size_t n = 100'000;
  Expectation expect = Expectation::Pass;
};

/// Validated experiment settings. Only problem, d, scheme and epsilon are
/// required; everything else has the defaults below.
struct ExperimentConfig {
  ProblemKind problem = ProblemKind::NonsmoothNorm;
  std::size_t d = 4;
  Scheme scheme = Scheme::L2;
  double epsilon = 0.05;

  Setting setting = Setting::Nonsmooth;
  int p = 2;
  ProblemParams params;

  NoiseKind noise = NoiseKind::Gaussian;
  /// Absolute noise level for `run`; overrides delta_multiplier when set.
  std::optional<double> delta;
  double delta_multiplier = 1.0;  ///< `run`: delta = multiplier * delta_max
  std::vector<double> multipliers{0.0, 1.0, 10.0, 100.0};  ///< `sweep`

  std::uint64_t seed = 1;
  std::size_t repeats = 10;
  std::vector<std::uint64_t> seeds;  ///< explicit list; overrides seed/repeats
  std::size_t batch = 1;
  std::optional<std::size_t> iterations;  ///< default: iteration_budget at delta_max
  double budget_constant = 4.0;
  StepRule step_rule = StepRule::DecreasingRSigma;
  std::optional<double> gamma;  ///< default: gamma_for_target
  NoisePairing pairing = NoisePairing::Independent;
  bool shared_xi = true;
  std::size_t workers = 1;

  std::string suite = "default";  ///< "default" or "negative"
  std::optional<std::vector<CheckConfig>> checks;
  double mc_scale = 1.0;  ///< multiplies the Monte Carlo sizes of the named suites

  std::string output_dir = "results";

  /// Seeds used by sweeps: `seeds` if given, else seed, seed+1, ..., seed+repeats-1.
  std::vector<std::uint64_t> seed_list() const;
};

/// Parses the JSON config text. Throws InvalidConfig naming the offending key
/// (missing required key, unknown key, bad value) or ParseError for invalid JSON.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Quantities derived from a config.
struct Resolved {
  Problem problem;
  EstimatorConfig estimator;
  double delta_max;
  std::size_t iterations;
};
Resolved resolve(const ExperimentConfig& cfg);

struct SweepRow {
  std::size_t run_id;
  Scheme scheme;
  std::size_t d;
  double epsilon;
  double gamma;
  double multiplier;
  double delta;
  std::uint64_t seed;
  double final_gap;
  std::uint64_t oracle_calls;
};

/// One optimisation per (multiplier, seed), ordered by multiplier then seed.
/// Cells may run on cfg.workers threads; the result does not depend on it.
std::vector<SweepRow> sweep(const ExperimentConfig& cfg);

/// Columns: run_id,scheme,d,epsilon,gamma,delta,final_gap,oracle_calls
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// Columns: iter,gap,calls
void write_trace_csv(std::ostream& out, const Trace& trace);

/// Single run at the configured noise level.
Trace single_run(const ExperimentConfig& cfg);

std::vector<CheckSpec> build_checks(const ExperimentConfig& cfg);

// Commands. Each returns a process exit code (0 success, 1 check failure) and
// throws IoError (with path) when output cannot be written.
int cmd_verify(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
               std::ostream& log);
int cmd_run(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
            std::ostream& log);
int cmd_sweep(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
              std::ostream& log);

/// Renders a trace CSV (gap vs iteration) or a sweep CSV (final gap vs delta,
/// log axes) to a standalone SVG. Throws ParseError with a line number on
/// malformed input; nothing is written in that case.
void emit_plot(const std::filesystem::path& csv_path, const std::filesystem::path& svg_path);
/// The SVG text for a parsed table.
std::string render_plot(const CsvTable& table);

/// Text report of the closed-form constants for the `constants` command.
struct ConstantsQuery {
  Scheme scheme = Scheme::L2;
  int p = 2;
  std::size_t d = 4;
  double epsilon = 0.05;
  double m2 = 1.0;
  Setting setting = Setting::Nonsmooth;
  double l = 1.0;
  std::optional<double> gamma;
};
void print_constants(std::ostream& out, const ConstantsQuery& q);

}  // namespace zoopt::experiment
