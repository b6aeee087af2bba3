#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zoopt/error.hpp"
#include "zoopt/experiment.hpp"

namespace {

// 0 success / all checks as expected, 1 check failure, 2 configuration error, 3 I/O error.
constexpr int kConfigError = 2;
constexpr int kIoError = 3;

}  // namespace

int main(int argc, char** argv) {
  namespace ex = zoopt::experiment;

  CLI::App app{"Zeroth-order stochastic convex optimisation toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;

  auto* verify = app.add_subcommand("verify", "Run the Monte Carlo check suite");
  verify->add_option("--config", config_path, "JSON config")->required();
  verify->add_option("--out", out_dir, "Output directory (default: config output_dir)");

  auto* run = app.add_subcommand("run", "Single optimisation run; writes trace.csv");
  run->add_option("--config", config_path, "JSON config")->required();
  run->add_option("--out", out_dir, "Output directory")->required();

  auto* sweep = app.add_subcommand("sweep", "Noise-level sweep; writes sweep.csv");
  sweep->add_option("--config", config_path, "JSON config")->required();
  sweep->add_option("--out", out_dir, "Output directory")->required();

  std::string csv_path;
  std::string svg_path;
  auto* plot = app.add_subcommand("plot", "Render a trace or sweep CSV as SVG");
  plot->add_option("csv", csv_path, "Input CSV")->required();
  plot->add_option("--out", svg_path, "Output SVG")->required();

  ex::ConstantsQuery query;
  std::string scheme = "L2";
  std::string setting = "nonsmooth";
  double gamma = 0.0;
  auto* constants = app.add_subcommand("constants", "Print closed-form constants");
  constants->add_option("--scheme", scheme, "L1 or L2")->required();
  constants->add_option("--p", query.p, "Norm exponent (1 or 2)")->required();
  constants->add_option("--d", query.d, "Dimension")->required();
  constants->add_option("--epsilon", query.epsilon, "Target accuracy")->capture_default_str();
  constants->add_option("--M2", query.m2, "Lipschitz constant in l2")->capture_default_str();
  constants->add_option("--setting", setting, "nonsmooth or smooth")->capture_default_str();
  constants->add_option("--L", query.l, "Gradient Lipschitz constant (smooth)")
      ->capture_default_str();
  auto* gamma_opt = constants->add_option("--gamma", gamma, "Override the smoothing radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*plot) {
      ex::emit_plot(csv_path, svg_path);
      std::cout << "plot: " << svg_path << '\n';
      return 0;
    }
    if (*constants) {
      query.scheme = zoopt::parse_scheme(scheme);
      query.setting = zoopt::parse_setting(setting);
      if (*gamma_opt) query.gamma = gamma;
      ex::print_constants(std::cout, query);
      return 0;
    }
    const ex::ExperimentConfig cfg = ex::load_config(config_path);
    if (*verify) return ex::cmd_verify(cfg, out_dir.empty() ? cfg.output_dir : out_dir, std::cout);
    if (*run) return ex::cmd_run(cfg, out_dir, std::cout);
    if (*sweep) return ex::cmd_sweep(cfg, out_dir, std::cout);
  } catch (const zoopt::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const zoopt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return 0;
}
