#include "zoopt/feasible_set.hpp"

#include <cmath>

#include "zoopt/error.hpp"

namespace zoopt {

FeasibleSet FeasibleSet::l2_ball(Vector center, double radius) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw InvalidConfig("radius", "ball radius must be finite and >= 0");
  }
  if (center.size() == 0) throw InvalidDimension(0);
  return FeasibleSet(Kind::L2Ball, std::move(center), Vector(), radius);
}

FeasibleSet FeasibleSet::box(Vector lower, Vector upper) {
  if (lower.size() != upper.size()) throw InvalidConfig("box", "bound sizes differ");
  if (lower.size() == 0) throw InvalidDimension(0);
  if ((lower.array() > upper.array()).any()) {
    throw InvalidConfig("box", "lower bound exceeds upper bound");
  }
  return FeasibleSet(Kind::Box, std::move(lower), std::move(upper), 0.0);
}

Vector FeasibleSet::project(const Vector& x) const {
  if (kind_ == Kind::Box) return x.cwiseMax(a_).cwiseMin(b_);
  const Vector offset = x - a_;
  const double dist = offset.norm();
  if (dist <= radius_) return x;
  return a_ + offset * (radius_ / dist);
}

bool FeasibleSet::contains(const Vector& x, double tol) const {
  if (x.size() != a_.size()) return false;
  if (kind_ == Kind::Box) {
    return ((x.array() >= a_.array() - tol) && (x.array() <= b_.array() + tol)).all();
  }
  return (x - a_).norm() <= radius_ + tol;
}

double FeasibleSet::diameter() const {
  return kind_ == Kind::Box ? (b_ - a_).norm() : 2.0 * radius_;
}

}  // namespace zoopt
