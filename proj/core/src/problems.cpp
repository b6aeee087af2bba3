#include "zoopt/problems.hpp"

#include <cmath>

#include "zoopt/error.hpp"

namespace zoopt {

namespace {

// xi uniform on [-b, b]^d / sqrt(d); |xi|_2 <= b.
Vector draw_xi(std::size_t d, double b, RngStream& rng) {
  Vector xi(static_cast<Eigen::Index>(d));
  if (b == 0.0) return xi.setZero();
  const double half = b / std::sqrt(static_cast<double>(d));
  for (auto& c : xi) c = rng.uniform(-half, half);
  return xi;
}

double linear_part(const Vector& xi, const Vector& x) { return xi.size() ? xi.dot(x) : 0.0; }

class ProblemObjective : public TestObjective {
 public:
  ProblemObjective(std::size_t d, double b) : d_(d), b_(b) {}
  std::size_t dimension() const override { return d_; }
  Vector sample_xi(RngStream& rng) const override { return draw_xi(d_, b_, rng); }

 protected:
  std::size_t d_;
  double b_;
};

class NormObjective final : public ProblemObjective {
 public:
  NormObjective(Vector center, double b)
      : ProblemObjective(static_cast<std::size_t>(center.size()), b), center_(std::move(center)) {}
  double value(const Vector& x, const Vector& xi) const override {
    return mean_value(x) + linear_part(xi, x);
  }
  double mean_value(const Vector& x) const override { return (x - center_).norm(); }
  std::optional<Vector> smoothed_gradient(const Vector&, double, Scheme) const override {
    return std::nullopt;
  }

 private:
  Vector center_;
};

class QuadraticObjective final : public ProblemObjective {
 public:
  QuadraticObjective(Vector center, double b)
      : ProblemObjective(static_cast<std::size_t>(center.size()), b), center_(std::move(center)) {}
  double value(const Vector& x, const Vector& xi) const override {
    const Vector r = xi.size() ? Vector(x - center_ - xi) : Vector(x - center_);
    return 0.5 * r.squaredNorm();
  }
  double mean_value(const Vector& x) const override {
    return 0.5 * (x - center_).squaredNorm() + noise_floor();
  }
  // Any symmetric smoothing of a quadratic leaves its gradient unchanged.
  std::optional<Vector> smoothed_gradient(const Vector& x, double, Scheme) const override {
    return Vector(x - center_);
  }
  /// 1/2 E|xi|^2 = b^2 / 6.
  double noise_floor() const { return b_ * b_ / 6.0; }

 private:
  Vector center_;
};

class MaxObjective final : public ProblemObjective {
 public:
  MaxObjective(Vector center, double b)
      : ProblemObjective(static_cast<std::size_t>(center.size()), b), center_(std::move(center)) {}
  double value(const Vector& x, const Vector& xi) const override {
    return mean_value(x) + linear_part(xi, x);
  }
  // max over the 2d pieces +-(x_j - x*_j)
  double mean_value(const Vector& x) const override {
    return (x - center_).lpNorm<Eigen::Infinity>();
  }
  std::optional<Vector> smoothed_gradient(const Vector&, double, Scheme) const override {
    return std::nullopt;
  }

 private:
  Vector center_;
};

class LinearObjective final : public ProblemObjective {
 public:
  LinearObjective(Vector coeffs, double b)
      : ProblemObjective(static_cast<std::size_t>(coeffs.size()), b), c_(std::move(coeffs)) {}
  double value(const Vector& x, const Vector& xi) const override {
    return c_.dot(x) + linear_part(xi, x);
  }
  double mean_value(const Vector& x) const override { return c_.dot(x); }
  std::optional<Vector> smoothed_gradient(const Vector&, double, Scheme) const override {
    return c_;
  }

 private:
  Vector c_;
};

}  // namespace

std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::NonsmoothNorm:
      return "nonsmooth_norm";
    case ProblemKind::SmoothQuadratic:
      return "smooth_quadratic";
    case ProblemKind::PiecewiseMax:
      return "piecewise_max";
    case ProblemKind::Linear:
      return "linear";
  }
  return "nonsmooth_norm";
}

ProblemKind parse_problem_kind(std::string_view text) {
  for (auto k : {ProblemKind::NonsmoothNorm, ProblemKind::SmoothQuadratic,
                 ProblemKind::PiecewiseMax, ProblemKind::Linear}) {
    if (text == to_string(k)) return k;
  }
  throw InvalidConfig("problem", "unknown problem kind '" + std::string(text) + "'");
}

double Problem::lipschitz(int p) const {
  if (p != 1 && p != 2) throw InvalidConfig("p", "norm exponent must be 1 or 2");
  return m2;
}

double Problem::radius(int p) const { return lp_norm(start - minimizer, p); }

Problem make_problem(ProblemKind kind, std::size_t d, const ProblemParams& params) {
  if (d == 0) throw InvalidDimension(d);
  const double b = params.xi_halfwidth;
  if (!(b >= 0.0) || !std::isfinite(b)) throw InvalidConfig("b", "xi half-width must be >= 0");
  if (!(params.radius > 0.0) || !std::isfinite(params.radius)) {
    throw InvalidConfig("radius", "feasible radius must be > 0");
  }
  if (!(params.start_distance >= 0.0) || params.start_distance > params.radius) {
    throw InvalidConfig("start_distance", "start distance must lie in [0, radius]");
  }
  const auto n = static_cast<Eigen::Index>(d);
  Vector anchor = params.minimizer.value_or(Vector::Zero(n));
  if (anchor.size() != n || !anchor.allFinite()) {
    throw InvalidConfig("minimizer", "expected " + std::to_string(d) + " finite coordinates");
  }
  const Vector diagonal = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(d)));

  if (kind == ProblemKind::Linear) {
    const Vector c = params.linear_coeffs.value_or(Vector::Ones(n));
    if (c.size() != n || !c.allFinite() || c.norm() == 0.0) {
      throw InvalidConfig("coeffs", "need " + std::to_string(d) + " finite, not all zero");
    }
    const Vector toward_center = c / c.norm();
    Vector minimizer = anchor - params.radius * toward_center;
    Vector start = minimizer + params.start_distance * toward_center;
    const double f_star = c.dot(minimizer);
    return Problem{kind,
                   d,
                   std::move(minimizer),
                   f_star,
                   c.norm() + b,
                   std::nullopt,
                   FeasibleSet::l2_ball(anchor, params.radius),
                   std::move(start),
                   b,
                   std::make_shared<LinearObjective>(c, b)};
  }

  Vector start = anchor + params.start_distance * diagonal;
  FeasibleSet feasible = FeasibleSet::l2_ball(anchor, params.radius);
  switch (kind) {
    case ProblemKind::NonsmoothNorm:
      return Problem{kind,         d, anchor,           0.0,
                     1.0 + b,      std::nullopt,        std::move(feasible),
                     std::move(start), b, std::make_shared<NormObjective>(anchor, b)};
    case ProblemKind::SmoothQuadratic: {
      auto objective = std::make_shared<QuadraticObjective>(anchor, b);
      const double f_star = objective->noise_floor();
      // Gradient x - x* - xi is bounded by diam(Q) + b on Q_gamma for gamma <= radius.
      const double m2 = feasible.diameter() + b;
      return Problem{kind,    d,   anchor, f_star,          m2,
                     1.0,     std::move(feasible), std::move(start), b, std::move(objective)};
    }
    case ProblemKind::PiecewiseMax:
      return Problem{kind,         d, anchor,           0.0,
                     1.0 + b,      std::nullopt,        std::move(feasible),
                     std::move(start), b, std::make_shared<MaxObjective>(anchor, b)};
    case ProblemKind::Linear:
      break;
  }
  throw InvalidConfig("problem", "unsupported problem kind");
}

double true_gap(const Problem& problem, const Vector& x) {
  return problem.mean_value(x) - problem.optimal_value;
}

}  // namespace zoopt
