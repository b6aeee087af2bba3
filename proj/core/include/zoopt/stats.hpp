#pragma once

#include <cstddef>
#include <utility>

#include "zoopt/error.hpp"
#include "zoopt/rng.hpp"
#include "zoopt/types.hpp"

namespace zoopt {

/// Two-sided 95% normal quantile used for every confidence interval.
inline constexpr double kZ95 = 1.96;

struct ScalarSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;       ///< unbiased sample variance
  double second_moment = 0.0;  ///< mean of squares
  double std_error = 0.0;      ///< sqrt(variance / n)
  double ci_halfwidth = 0.0;   ///< kZ95 * std_error
};

/// Summary of a vector-valued sample. `sq_norm` summarises |v|_q^2 for the
/// norm chosen at accumulation time.
struct VectorSummary {
  std::size_t n = 0;
  Vector mean;
  Vector std_error;
  Vector ci_halfwidth;
  ScalarSummary sq_norm;
};

/// Welford running mean / variance.
class ScalarAccumulator {
 public:
  void add(double x);
  std::size_t count() const noexcept { return n_; }
  ScalarSummary summary() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double sum_sq_ = 0.0;
};

class VectorAccumulator {
 public:
  /// `norm_p` selects the norm of the squared-norm statistic (1, 2, or kMaxNorm).
  VectorAccumulator(std::size_t dim, int norm_p = 2);

  void add(const Vector& v);
  std::size_t count() const noexcept { return n_; }
  VectorSummary summary() const;

 private:
  std::size_t n_ = 0;
  int norm_p_;
  Vector mean_;
  Vector m2_;
  ScalarAccumulator sq_norm_;
};

/// Monte Carlo summary of a scalar sampler `double(RngStream&)`.
/// Throws InvalidConfig("n") for n < 2.
template <typename Sampler>
ScalarSummary mc_summary(Sampler&& sampler, std::size_t n, RngStream& rng) {
  if (n < 2) throw InvalidConfig("n", "Monte Carlo needs at least 2 samples");
  ScalarAccumulator acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(sampler(rng));
  return acc.summary();
}

/// Monte Carlo summary of a vector sampler `Vector(RngStream&)`.
template <typename Sampler>
VectorSummary mc_vector_summary(Sampler&& sampler, std::size_t dim, std::size_t n,
                                RngStream& rng, int norm_p = 2) {
  if (n < 2) throw InvalidConfig("n", "Monte Carlo needs at least 2 samples");
  VectorAccumulator acc(dim, norm_p);
  for (std::size_t i = 0; i < n; ++i) acc.add(sampler(rng));
  return acc.summary();
}

}  // namespace zoopt
