#include "zoopt/stats.hpp"

#include <cmath>

namespace zoopt {

void ScalarAccumulator::add(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
  sum_sq_ += x * x;
}

ScalarSummary ScalarAccumulator::summary() const {
  ScalarSummary s;
  s.n = n_;
  if (n_ == 0) return s;
  const double n = static_cast<double>(n_);
  s.mean = mean_;
  s.variance = n_ > 1 ? m2_ / (n - 1.0) : 0.0;
  s.second_moment = sum_sq_ / n;
  s.std_error = std::sqrt(s.variance / n);
  s.ci_halfwidth = kZ95 * s.std_error;
  return s;
}

VectorAccumulator::VectorAccumulator(std::size_t dim, int norm_p)
    : norm_p_(norm_p),
      mean_(Vector::Zero(static_cast<Eigen::Index>(dim))),
      m2_(Vector::Zero(static_cast<Eigen::Index>(dim))) {}

void VectorAccumulator::add(const Vector& v) {
  ++n_;
  const Vector delta = v - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_.array() += delta.array() * (v - mean_).array();
  const double norm = lp_norm(v, norm_p_);
  sq_norm_.add(norm * norm);
}

VectorSummary VectorAccumulator::summary() const {
  VectorSummary s;
  s.n = n_;
  s.mean = mean_;
  const double n = static_cast<double>(n_);
  if (n_ > 1) {
    s.std_error = (m2_ / (n - 1.0) / n).cwiseSqrt();
  } else {
    s.std_error = Vector::Zero(mean_.size());
  }
  s.ci_halfwidth = kZ95 * s.std_error;
  s.sq_norm = sq_norm_.summary();
  return s;
}

}  // namespace zoopt
