#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zoopt/noise.hpp"
#include "zoopt/problems.hpp"
#include "zoopt/types.hpp"

namespace zoopt {

/// Slack, in standard errors, of every one-sided or coordinatewise check.
inline constexpr double kCheckSigmas = 4.0;

struct CheckReport {
  std::string name;
  bool pass = false;
  double observed = 0.0;
  double bound = 0.0;
  double ci_halfwidth = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo mean of the two-point estimator against the closed-form
/// smoothed gradient. observed = max_i |mean_i - target_i| / se_i, bound = 4;
/// passes iff every coordinate is within 4 standard errors.
/// Throws InvalidConfig("problem") when the problem has no closed-form smoothed gradient.
CheckReport check_unbiasedness(const Problem& problem, Scheme scheme, const Vector& x,
                               double gamma, const NoiseSpec& noise, std::size_t n,
                               std::uint64_t seed,
                               NoisePairing pairing = NoisePairing::Independent);

/// Empirical E|g|_q^2 against variance_bound. `claimed_delta` is the level
/// plugged into the bound (defaults to noise.delta); understating it gives a
/// negative control. Passes iff observed <= bound + 4 se.
CheckReport check_variance_bound(const Problem& problem, Scheme scheme, int p,
                                 const Vector& x, double gamma, const NoiseSpec& noise,
                                 std::size_t n, std::uint64_t seed,
                                 std::optional<double> claimed_delta = std::nullopt);

/// Monte Carlo smoothed-minus-true gap of the mean objective at x; passes
/// iff gap lies in [-ci, smoothing_bias_bound + ci] (95% ci).
CheckReport check_sandwich(const Problem& problem, Scheme scheme, Setting setting,
                           const Vector& x, double gamma, std::size_t n, std::uint64_t seed);

enum class Expectation { Pass, Fail };

struct CheckSpec {
  std::string name;
  std::string group;
  Expectation expect = Expectation::Pass;
  std::function<CheckReport()> run;
};

struct SuiteOptions {
  std::uint64_t seed = 20230601;
  std::size_t unbiased_n = 1'000'000;
  std::size_t variance_n = 100'000;
  std::size_t sandwich_n = 100'000;
};

/// Positive checks for every scheme plus the two negative controls
/// (direction-correlated noise; understated noise level), which are expected to fail.
std::vector<CheckSpec> default_suite(const SuiteOptions& opts);

/// The negative-control configurations run as ordinary checks (expected to
/// pass). A working verifier reports them as failures.
std::vector<CheckSpec> negative_control_suite(const SuiteOptions& opts);

struct SuiteOutcome {
  std::string name;
  std::string group;
  Expectation expect;
  CheckReport report;
  bool as_expected() const { return report.pass == (expect == Expectation::Pass); }
};

std::vector<SuiteOutcome> run_suite(const std::vector<CheckSpec>& suite);
bool suite_ok(const std::vector<SuiteOutcome>& outcomes);

/// Header: check,group,expect,pass,as_expected,observed,bound,ci_halfwidth,n,seed
void write_report_csv(std::ostream& out, const std::vector<SuiteOutcome>& outcomes);
void write_report_summary(std::ostream& out, const std::vector<SuiteOutcome>& outcomes);

}  // namespace zoopt
