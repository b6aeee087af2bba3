#include "zoopt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zoopt/error.hpp"

namespace zoopt {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kOnePlusSqrt2Sq = (1.0 + kSqrt2) * (1.0 + kSqrt2);

void require_p(int p) {
  if (p != 1 && p != 2) throw InvalidConfig("p", "norm exponent must be 1 or 2");
}

}  // namespace

double kappa(Scheme scheme, int p, std::size_t d) {
  require_p(p);
  if (d == 0) throw InvalidDimension(d);
  const auto dd = static_cast<double>(d);
  const double inv_p = 1.0 / static_cast<double>(p);
  if (scheme == Scheme::L1) {
    return 48.0 * kOnePlusSqrt2Sq * std::pow(dd, 2.0 - 2.0 * inv_p);
  }
  const double q = p == 1 ? std::numeric_limits<double>::infinity() : 2.0;
  return kSqrt2 * std::min(q, std::log(dd)) * std::pow(dd, 1.0 - 2.0 * inv_p);
}

double variance_bound(Scheme scheme, int p, std::size_t d, double m2, double delta,
                      double gamma) {
  if (m2 < 0.0) throw InvalidConfig("M2", "Lipschitz constant must be >= 0");
  if (delta < 0.0) throw InvalidConfig("delta", "noise level must be >= 0");
  const double k = kappa(scheme, p, d);
  const auto dd = static_cast<double>(d);
  double noise_term = 0.0;
  if (delta > 0.0) {
    if (!(gamma > 0.0)) throw InvalidConfig("gamma", "bound diverges for gamma <= 0");
    const double ratio = dd * dd * delta * delta / (gamma * gamma);
    noise_term = scheme == Scheme::L1 ? ratio / (12.0 * kOnePlusSqrt2Sq) : ratio / kSqrt2;
  }
  const double signal = scheme == Scheme::L1 ? m2 * m2 : dd * m2 * m2;
  return k * (signal + noise_term);
}

double smoothing_bias_bound(Scheme scheme, Setting setting, double m2_or_l, double gamma,
                            std::size_t d) {
  if (d == 0) throw InvalidDimension(d);
  const auto dd = static_cast<double>(d);
  if (setting == Setting::Nonsmooth) {
    return scheme == Scheme::L1 ? 2.0 * gamma * m2_or_l / std::sqrt(dd) : gamma * m2_or_l;
  }
  const double sq = gamma * gamma * m2_or_l * m2_or_l;
  return scheme == Scheme::L1 ? 2.0 / dd * sq : sq;
}

double smoothing_lipschitz_grad(Scheme scheme, double m, double gamma, std::size_t d) {
  if (!(gamma > 0.0)) throw InvalidConfig("gamma", "smoothing parameter must be > 0");
  if (d == 0) throw InvalidDimension(d);
  const auto dd = static_cast<double>(d);
  return (scheme == Scheme::L1 ? dd : std::sqrt(dd)) * m / gamma;
}

}  // namespace zoopt
