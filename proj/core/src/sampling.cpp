#include "zoopt/sampling.hpp"

#include <cmath>

#include "zoopt/error.hpp"

namespace zoopt {

namespace {
void require_dimension(std::size_t d) {
  if (d == 0) throw InvalidDimension(d);
}
}  // namespace

Vector sample_sphere_l1(std::size_t d, RngStream& rng) {
  require_dimension(d);
  Vector v(static_cast<Eigen::Index>(d));
  double total = 0.0;
  while (total == 0.0) {
    for (auto& c : v) {
      c = rng.exponential();
      total += c;
    }
  }
  for (auto& c : v) c = rng.rademacher() * (c / total);
  return v;
}

Vector sample_sphere_l2(std::size_t d, RngStream& rng) {
  require_dimension(d);
  Vector v(static_cast<Eigen::Index>(d));
  double norm = 0.0;
  // A zero Gaussian vector has probability zero but would divide by zero.
  while (norm == 0.0) {
    for (auto& c : v) c = rng.normal();
    norm = v.norm();
  }
  return v / norm;
}

Vector sample_sphere(Scheme norm, std::size_t d, RngStream& rng) {
  return norm == Scheme::L1 ? sample_sphere_l1(d, rng) : sample_sphere_l2(d, rng);
}

Vector sample_ball(Scheme norm, std::size_t d, RngStream& rng) {
  Vector v = sample_sphere(norm, d, rng);
  const double scale = std::pow(rng.uniform(), 1.0 / static_cast<double>(d));
  return v * scale;
}

}  // namespace zoopt
