#pragma once

#include <string>

#include "zoopt/types.hpp"

namespace zoopt {

/// Convex compact feasible set: an l2 ball or an axis-aligned box.
class FeasibleSet {
 public:
  enum class Kind { L2Ball, Box };

  /// Throws InvalidConfig("radius") for a negative radius.
  static FeasibleSet l2_ball(Vector center, double radius);
  /// Throws InvalidConfig("box") if sizes differ or some lower > upper.
  static FeasibleSet box(Vector lower, Vector upper);

  Kind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return a_.size(); }
  const Vector& center() const noexcept { return a_; }  ///< ball centre
  double radius() const noexcept { return radius_; }
  const Vector& lower() const noexcept { return a_; }  ///< box
  const Vector& upper() const noexcept { return b_; }  ///< box

  /// Euclidean projection.
  Vector project(const Vector& x) const;
  bool contains(const Vector& x, double tol = 1e-9) const;
  /// Euclidean diameter.
  double diameter() const;

 private:
  FeasibleSet(Kind kind, Vector a, Vector b, double radius)
      : kind_(kind), a_(std::move(a)), b_(std::move(b)), radius_(radius) {}

  Kind kind_;
  Vector a_;
  Vector b_;
  double radius_;
};

}  // namespace zoopt
