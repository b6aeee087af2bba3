#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zoopt/error.hpp"
#include "zoopt/experiment.hpp"

namespace zoopt::experiment {

using nlohmann::json;

namespace {

const std::set<std::string> kTopLevelKeys = {
    "problem",  "d",          "scheme",       "epsilon",   "setting",     "p",
    "b",        "radius",     "start_distance", "minimizer", "coeffs",    "noise",
    "delta",    "delta_multiplier", "multipliers", "seed",   "repeats",     "seeds",
    "batch",    "iterations", "budget_constant", "step_rule", "gamma",    "pairing",
    "shared_xi", "workers",   "suite",        "checks",    "mc_scale",    "output_dir"};

const std::set<std::string> kCheckKeys = {"type",  "problem", "d",     "scheme",
                                          "setting", "p",     "gamma", "noise",
                                          "delta", "pairing", "claimed_delta", "at",
                                          "n",     "expect"};

/// Reads typed fields of one JSON object, naming keys as `<prefix><key>`.
class Reader {
 public:
  Reader(const json& obj, std::string prefix) : obj_(obj), prefix_(std::move(prefix)) {}

  bool has(const char* key) const { return obj_.contains(key) && !obj_.at(key).is_null(); }
  std::string name(const char* key) const { return prefix_ + key; }

  void reject_unknown(const std::set<std::string>& known) const {
    for (const auto& item : obj_.items()) {
      if (!known.count(item.key())) throw InvalidConfig(prefix_ + item.key(), "unknown key");
    }
  }
  void require(const char* key) const {
    if (!has(key)) throw InvalidConfig(name(key), "missing required key");
  }

  double number(const char* key) const {
    const json& v = obj_.at(key);
    if (!v.is_number()) throw InvalidConfig(name(key), "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw InvalidConfig(name(key), "expected a finite number");
    return x;
  }
  double positive(const char* key) const {
    const double x = number(key);
    if (!(x > 0.0)) throw InvalidConfig(name(key), "must be > 0");
    return x;
  }
  double nonnegative(const char* key) const {
    const double x = number(key);
    if (x < 0.0) throw InvalidConfig(name(key), "must be >= 0");
    return x;
  }
  std::uint64_t count(const char* key, std::uint64_t min) const {
    return as_count(obj_.at(key), name(key), min);
  }
  std::string text(const char* key) const {
    const json& v = obj_.at(key);
    if (!v.is_string()) throw InvalidConfig(name(key), "expected a string");
    return v.get<std::string>();
  }
  bool flag(const char* key) const {
    const json& v = obj_.at(key);
    if (!v.is_boolean()) throw InvalidConfig(name(key), "expected true or false");
    return v.get<bool>();
  }
  Vector vector(const char* key) const {
    const json& v = obj_.at(key);
    if (!v.is_array()) throw InvalidConfig(name(key), "expected an array of numbers");
    Vector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) throw InvalidConfig(name(key), "expected an array of numbers");
      out[static_cast<Eigen::Index>(i)] = v[i].get<double>();
    }
    return out;
  }

  /// Runs `parse` on a string value, re-labelling InvalidConfig with this key.
  template <typename Parse>
  auto parsed(const char* key, Parse&& parse) const {
    const std::string value = text(key);
    try {
      return parse(value);
    } catch (const InvalidConfig&) {
      throw InvalidConfig(name(key), "invalid value '" + value + "'");
    }
  }

  static std::uint64_t as_count(const json& v, const std::string& key, std::uint64_t min) {
    if (!v.is_number_integer()) throw InvalidConfig(key, "expected an integer");
    if (v.is_number_unsigned()) {
      const auto x = v.get<std::uint64_t>();
      if (x < min) throw InvalidConfig(key, "must be >= " + std::to_string(min));
      return x;
    }
    const auto x = v.get<std::int64_t>();
    if (x < 0 || static_cast<std::uint64_t>(x) < min) {
      throw InvalidConfig(key, "must be >= " + std::to_string(min));
    }
    return static_cast<std::uint64_t>(x);
  }

 private:
  const json& obj_;
  std::string prefix_;
};

int parse_p(const Reader& r, const char* key) {
  const auto p = r.count(key, 1);
  if (p != 1 && p != 2) throw InvalidConfig(r.name(key), "must be 1 or 2");
  return static_cast<int>(p);
}

CheckConfig parse_check(const json& j, std::size_t index) {
  const std::string prefix = "checks[" + std::to_string(index) + "].";
  if (!j.is_object()) throw InvalidConfig(prefix.substr(0, prefix.size() - 1), "expected an object");
  Reader r(j, prefix);
  r.reject_unknown(kCheckKeys);
  r.require("type");

  CheckConfig c;
  c.type = r.parsed("type", [](const std::string& s) {
    if (s == "unbiasedness") return CheckConfig::Type::Unbiasedness;
    if (s == "variance") return CheckConfig::Type::Variance;
    if (s == "sandwich") return CheckConfig::Type::Sandwich;
    throw InvalidConfig("type", s);
  });
  if (r.has("problem")) c.problem = r.parsed("problem", parse_problem_kind);
  if (r.has("d")) c.d = r.count("d", 1);
  if (r.has("scheme")) c.scheme = r.parsed("scheme", parse_scheme);
  if (r.has("setting")) c.setting = r.parsed("setting", parse_setting);
  if (r.has("p")) c.p = parse_p(r, "p");
  if (r.has("gamma")) c.gamma = r.nonnegative("gamma");
  if (r.has("noise")) c.noise.kind = r.parsed("noise", parse_noise_kind);
  if (r.has("delta")) c.noise.delta = r.nonnegative("delta");
  if (r.has("pairing")) c.pairing = r.parsed("pairing", parse_noise_pairing);
  if (r.has("claimed_delta")) c.claimed_delta = r.nonnegative("claimed_delta");
  if (r.has("at")) {
    c.at_minimizer = r.parsed("at", [](const std::string& s) {
      if (s == "start") return false;
      if (s == "minimizer") return true;
      throw InvalidConfig("at", s);
    });
  }
  if (r.has("n")) c.n = r.count("n", 2);
  if (r.has("expect")) {
    c.expect = r.parsed("expect", [](const std::string& s) {
      if (s == "pass") return Expectation::Pass;
      if (s == "fail") return Expectation::Fail;
      throw InvalidConfig("expect", s);
    });
  }
  return c;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

}  // namespace

std::vector<std::uint64_t> ExperimentConfig::seed_list() const {
  if (!seeds.empty()) return seeds;
  std::vector<std::uint64_t> out(repeats);
  for (std::size_t i = 0; i < repeats; ++i) out[i] = seed + i;
  return out;
}

ExperimentConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError(1, "config must be a JSON object");

  Reader r(root, "");
  r.reject_unknown(kTopLevelKeys);
  for (const char* key : {"problem", "d", "scheme", "epsilon"}) r.require(key);

  ExperimentConfig cfg;
  cfg.problem = r.parsed("problem", parse_problem_kind);
  cfg.d = r.count("d", 1);
  cfg.scheme = r.parsed("scheme", parse_scheme);
  cfg.epsilon = r.positive("epsilon");

  if (r.has("setting")) cfg.setting = r.parsed("setting", parse_setting);
  if (r.has("p")) cfg.p = parse_p(r, "p");
  if (r.has("b")) cfg.params.xi_halfwidth = r.nonnegative("b");
  if (r.has("radius")) cfg.params.radius = r.positive("radius");
  if (r.has("start_distance")) cfg.params.start_distance = r.nonnegative("start_distance");
  if (r.has("minimizer")) cfg.params.minimizer = r.vector("minimizer");
  if (r.has("coeffs")) cfg.params.linear_coeffs = r.vector("coeffs");
  if (r.has("noise")) cfg.noise = r.parsed("noise", parse_noise_kind);
  if (r.has("delta")) cfg.delta = r.nonnegative("delta");
  if (r.has("delta_multiplier")) cfg.delta_multiplier = r.nonnegative("delta_multiplier");
  if (r.has("multipliers")) {
    const Vector m = r.vector("multipliers");
    if ((m.array() < 0.0).any()) throw InvalidConfig("multipliers", "must be >= 0");
    cfg.multipliers.assign(m.begin(), m.end());
  }
  if (r.has("seed")) cfg.seed = r.count("seed", 0);
  if (r.has("repeats")) cfg.repeats = r.count("repeats", 1);
  if (r.has("seeds")) {
    const json& s = root.at("seeds");
    if (!s.is_array() || s.empty()) throw InvalidConfig("seeds", "expected a non-empty array");
    cfg.seeds.clear();
    for (const auto& v : s) cfg.seeds.push_back(Reader::as_count(v, "seeds", 0));
  }
  if (r.has("batch")) cfg.batch = r.count("batch", 1);
  if (r.has("iterations")) cfg.iterations = r.count("iterations", 0);
  if (r.has("budget_constant")) cfg.budget_constant = r.positive("budget_constant");
  if (r.has("step_rule")) cfg.step_rule = r.parsed("step_rule", parse_step_rule);
  if (r.has("gamma")) cfg.gamma = r.positive("gamma");
  if (r.has("pairing")) cfg.pairing = r.parsed("pairing", parse_noise_pairing);
  if (r.has("shared_xi")) cfg.shared_xi = r.flag("shared_xi");
  if (r.has("workers")) cfg.workers = r.count("workers", 1);
  if (r.has("suite")) {
    cfg.suite = r.text("suite");
    if (cfg.suite != "default" && cfg.suite != "negative") {
      throw InvalidConfig("suite", "expected 'default' or 'negative'");
    }
  }
  if (r.has("checks")) {
    const json& list = root.at("checks");
    if (!list.is_array()) throw InvalidConfig("checks", "expected an array");
    std::vector<CheckConfig> checks;
    for (std::size_t i = 0; i < list.size(); ++i) checks.push_back(parse_check(list[i], i));
    cfg.checks = std::move(checks);
  }
  if (r.has("mc_scale")) cfg.mc_scale = r.positive("mc_scale");
  if (r.has("output_dir")) cfg.output_dir = r.text("output_dir");
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open config");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace zoopt::experiment
