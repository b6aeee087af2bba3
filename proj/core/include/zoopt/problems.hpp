#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "zoopt/feasible_set.hpp"
#include "zoopt/oracle.hpp"
#include "zoopt/types.hpp"

namespace zoopt {

/// Test objectives with closed-form mean, minimiser and Lipschitz constants.
///
///   nonsmooth_norm   f(x, xi) = |x - x*|_2 + <xi, x>
///   smooth_quadratic f(x, xi) = 1/2 |x - x* - xi|_2^2
///   piecewise_max    f(x, xi) = max_i (<a_i, x> + c_i) + <xi, x>,
///                    pieces a_i = +-e_j, c_i = -+x*_j, i.e. |x - x*|_inf
///   linear           f(x, xi) = <c + xi, x>
///
/// xi is uniform on [-b, b]^d / sqrt(d), so E[xi] = 0 and |xi|_2 <= b.
enum class ProblemKind { NonsmoothNorm, SmoothQuadratic, PiecewiseMax, Linear };

std::string to_string(ProblemKind k);
ProblemKind parse_problem_kind(std::string_view text);

struct ProblemParams {
  double xi_halfwidth = 0.5;  ///< b
  double radius = 2.0;        ///< radius of the feasible l2 ball
  double start_distance = 1.0;
  /// Defaults to the origin. For `linear` this is the ball centre instead.
  std::optional<Vector> minimizer;
  /// Coefficients c of `linear`; defaults to (1, ..., 1).
  std::optional<Vector> linear_coeffs;
};

/// Objective that also knows its mean and, where it exists in closed form,
/// the gradient of its smoothed mean.
class TestObjective : public StochasticObjective {
 public:
  virtual double mean_value(const Vector& x) const = 0;
  /// Gradient of E_u[f(x + gamma u)] for u uniform on the unit ball of
  /// `scheme`; nullopt when there is no closed form.
  virtual std::optional<Vector> smoothed_gradient(const Vector& x, double gamma,
                                                  Scheme scheme) const = 0;
};

struct Problem {
  ProblemKind kind;
  std::size_t dim;
  Vector minimizer;
  double optimal_value;
  double m2;  ///< Lipschitz constant in l2: E[M(xi)^2] <= m2^2
  std::optional<double> grad_lipschitz;  ///< L, smooth kinds only
  FeasibleSet feasible;
  Vector start;
  double xi_halfwidth;
  std::shared_ptr<const TestObjective> objective;

  /// Lipschitz constant in the l_p norm. For p <= 2 this is m2, since
  /// |v|_2 <= |v|_p.
  double lipschitz(int p) const;
  /// R = |x0 - x*|_p.
  double radius(int p) const;
  double mean_value(const Vector& x) const { return objective->mean_value(x); }
};

/// Throws InvalidDimension for d = 0 and InvalidConfig for bad parameters.
Problem make_problem(ProblemKind kind, std::size_t d, const ProblemParams& params = {});

/// f(x) - f* from the closed-form mean.
double true_gap(const Problem& problem, const Vector& x);

}  // namespace zoopt
