#include "zoopt/types.hpp"

#include <cmath>
#include <sstream>

#include "zoopt/error.hpp"

namespace zoopt {

std::string to_string(Scheme s) { return s == Scheme::L1 ? "L1" : "L2"; }

std::string to_string(Setting s) { return s == Setting::Nonsmooth ? "nonsmooth" : "smooth"; }

Scheme parse_scheme(std::string_view text) {
  if (text == "L1" || text == "l1") return Scheme::L1;
  if (text == "L2" || text == "l2") return Scheme::L2;
  throw InvalidConfig("scheme", "unknown scheme '" + std::string(text) + "' (expected L1 or L2)");
}

Setting parse_setting(std::string_view text) {
  if (text == "nonsmooth") return Setting::Nonsmooth;
  if (text == "smooth") return Setting::Smooth;
  throw InvalidConfig("setting", "unknown setting '" + std::string(text) + "'");
}

double lp_norm(const Vector& v, int p) {
  switch (p) {
    case 1:
      return v.lpNorm<1>();
    case 2:
      return v.norm();
    case kMaxNorm:
      return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
    default:
      throw InvalidConfig("p", "unsupported norm exponent " + std::to_string(p));
  }
}

int dual_exponent(int p) {
  if (p == 1) return kMaxNorm;
  if (p == 2) return 2;
  throw InvalidConfig("p", "unsupported norm exponent " + std::to_string(p));
}

Vector sign(const Vector& v) {
  return v.unaryExpr([](double c) { return c > 0.0 ? 1.0 : (c < 0.0 ? -1.0 : 0.0); });
}

bool all_finite(const Vector& v) { return v.allFinite(); }

namespace {
std::string describe(const Vector& x, double value) {
  std::ostringstream os;
  os.precision(17);
  os << "objective returned " << value << " at x = (";
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}
}  // namespace

EvaluationError::EvaluationError(Vector x, double value)
    : Error(describe(x, value)), x_(std::move(x)) {}

}  // namespace zoopt
