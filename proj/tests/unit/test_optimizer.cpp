// Projection, step rules and the averaged projected SGD driver.

#include <gtest/gtest.h>

#include <cmath>

#include "zoopt/bounds.hpp"
#include "zoopt/error.hpp"
#include "zoopt/feasible_set.hpp"
#include "zoopt/optimizer.hpp"
#include "zoopt/problems.hpp"

using namespace zoopt;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

struct Setup {
  Problem problem;
  EstimatorConfig est;
  RunConfig run;
  NoiseSpec noise;
};

Setup harness_setup(ProblemKind kind, Setting setting, std::size_t d, double epsilon,
                    std::size_t batch = 1) {
  Problem pb = make_problem(kind, d);
  const double constant = setting == Setting::Smooth ? *pb.grad_lipschitz : pb.m2;
  EstimatorConfig est = estimator_for_target(pb, Scheme::L2, setting, epsilon, 2, batch);
  RunConfig run;
  run.epsilon = epsilon;
  run.setting = setting;
  const double sigma2 = variance_bound(Scheme::L2, 2, d, pb.m2, 0.0, est.gamma) / batch;
  run.iterations = iteration_budget(sigma2, pb.radius(2), epsilon);
  (void)constant;
  return {std::move(pb), est, run, NoiseSpec{}};
}

}  // namespace

TEST(Projection, Examples) {
  const auto ball = FeasibleSet::l2_ball(Vector::Zero(2), 1.0);
  EXPECT_EQ(ball.project(vec2(0, 2)), vec2(0, 1));
  EXPECT_EQ(ball.project(vec2(0.3, -0.4)), vec2(0.3, -0.4));
  const auto box = FeasibleSet::box(Vector::Constant(2, -1), Vector::Constant(2, 1));
  EXPECT_EQ(box.project(vec2(2, -3)), vec2(1, -1));
  EXPECT_EQ(box.project(vec2(0.5, 0)), vec2(0.5, 0));
  EXPECT_NEAR(box.diameter(), std::sqrt(8.0), 1e-15);
  EXPECT_EQ(ball.diameter(), 2.0);
}

TEST(Projection, IsNearestPointAndIdempotent) {
  // Projection onto a convex set satisfies <x - P x, y - P x> <= 0 for y in Q.
  const auto ball = FeasibleSet::l2_ball(vec2(1, -1), 2.0);
  const auto box = FeasibleSet::box(vec2(-1, 0), vec2(2, 0.5));
  RngStream r(1, 0);
  for (const FeasibleSet* q : {&ball, &box}) {
    for (int i = 0; i < 1000; ++i) {
      const Vector x = vec2(r.uniform(-6, 6), r.uniform(-6, 6));
      const Vector px = q->project(x);
      ASSERT_TRUE(q->contains(px));
      ASSERT_LE((q->project(px) - px).norm(), 1e-12);
      const Vector y = q->project(vec2(r.uniform(-6, 6), r.uniform(-6, 6)));
      ASSERT_LE((x - px).dot(y - px), 1e-9);
    }
  }
}

TEST(Projection, InvalidSets) {
  EXPECT_THROW(FeasibleSet::l2_ball(Vector::Zero(2), -1.0), InvalidConfig);
  EXPECT_THROW(FeasibleSet::box(vec2(0, 0), vec2(1, -1)), InvalidConfig);
  EXPECT_THROW(FeasibleSet::box(vec2(0, 0), Vector::Zero(3)), InvalidConfig);
}

TEST(StepSize, Examples) {
  EXPECT_NEAR(step_size(StepRule::ConstantInvL, 40.0, 1.0, 1.0, 10, 3), 0.025, 1e-15);
  EXPECT_NEAR(step_size(StepRule::DecreasingRSigma, 1.0, 100.0, 1.0, 400, 0), 0.005, 1e-15);
  EXPECT_EQ(step_size(StepRule::DecreasingRSigma, 1.0, 100.0, 1.0, 400, 0),
            step_size(StepRule::DecreasingRSigma, 1.0, 100.0, 1.0, 400, 399));
  EXPECT_THROW(step_size(StepRule::DecreasingRSigma, 1.0, 100.0, 1.0, 0, 0), InvalidConfig);
  EXPECT_THROW(step_size(StepRule::ConstantInvL, 0.0, 1.0, 1.0, 10, 0), InvalidConfig);
}

TEST(StepSize, NonincreasingInHorizon) {
  double prev = INFINITY;
  for (std::size_t n : {1u, 2u, 10u, 100u, 10'000u}) {
    const double s = step_size(StepRule::DecreasingRSigma, 1.0, 3.0, 2.0, n, 0);
    EXPECT_LE(s, prev);
    prev = s;
  }
}

TEST(IterationBudget, Formula) {
  EXPECT_EQ(iteration_budget(100.0, 1.0, 0.1), 40'000u);
  EXPECT_EQ(iteration_budget(1.0, 1.0, 3.0), 1u);
  EXPECT_EQ(iteration_budget(2.0, 0.5, 0.1, 1.0), 50u);
}

TEST(Run, StartAtMinimizerWithoutIterations) {
  ProblemParams params;
  params.start_distance = 0.0;
  const Problem pb = make_problem(ProblemKind::NonsmoothNorm, 3, params);
  RunConfig rc;
  rc.iterations = 0;
  const Trace t =
      run(pb, rc, estimator_for_target(pb, Scheme::L1, Setting::Nonsmooth, 0.05), {});
  ASSERT_EQ(t.gap.size(), 1u);
  EXPECT_EQ(t.final_gap(), 0.0);
  EXPECT_EQ(t.oracle_calls(), 0u);
  EXPECT_EQ(t.final_point, pb.minimizer);
}

TEST(Run, SmoothQuadraticReachesTarget) {
  auto s = harness_setup(ProblemKind::SmoothQuadratic, Setting::Smooth, 2, 0.05);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    s.run.seed = seed;
    const Trace t = run(s.problem, s.run, s.est, s.noise);
    EXPECT_LE(t.final_gap(), 0.05) << "seed " << seed;
  }
}

TEST(Run, NonsmoothNormReachesTarget) {
  auto s = harness_setup(ProblemKind::NonsmoothNorm, Setting::Nonsmooth, 4, 0.1);
  const Trace t = run(s.problem, s.run, s.est, s.noise);
  EXPECT_LE(t.final_gap(), 0.1);
}

TEST(Run, CallAccountingAndLengths) {
  auto s = harness_setup(ProblemKind::NonsmoothNorm, Setting::Nonsmooth, 3, 0.2, 3);
  s.run.iterations = 250;
  s.noise = {NoiseKind::Gaussian, 0.01};
  const Trace t = run(s.problem, s.run, s.est, s.noise);
  ASSERT_EQ(t.gap.size(), 251u);
  ASSERT_EQ(t.calls.size(), 251u);
  EXPECT_EQ(t.oracle_calls(), 2u * 3u * 250u);
  for (std::size_t k = 0; k < t.calls.size(); ++k) ASSERT_EQ(t.calls[k], 6u * k);
}

TEST(Run, IteratesStayFeasibleAndQueriesInInflatedSet) {
  auto s = harness_setup(ProblemKind::NonsmoothNorm, Setting::Nonsmooth, 4, 0.1);
  s.run.iterations = 2000;
  s.run.step_rule = StepRule::ConstantInvL;
  s.noise = {NoiseKind::Gaussian, 0.5};
  const FeasibleSet& q = s.problem.feasible;
  std::size_t seen = 0;
  s.run.observer = [&](std::size_t k, const Vector& x) {
    ASSERT_EQ(k, seen++);
    ASSERT_TRUE(q.contains(x));
    // Query points x +- gamma e with |e|_2 = 1 lie within gamma of Q.
    ASSERT_LE((x - q.center()).norm() + s.est.gamma, q.radius() + s.est.gamma + 1e-9);
  };
  run(s.problem, s.run, s.est, s.noise);
  EXPECT_EQ(seen, 2001u);
}

TEST(Run, Deterministic) {
  auto s = harness_setup(ProblemKind::PiecewiseMax, Setting::Nonsmooth, 3, 0.2);
  s.run.iterations = 500;
  s.noise = {NoiseKind::Uniform, 0.05};
  const Trace a = run(s.problem, s.run, s.est, s.noise);
  const Trace b = run(s.problem, s.run, s.est, s.noise);
  EXPECT_EQ(a.gap, b.gap);
  EXPECT_EQ(a.final_point, b.final_point);
  s.run.seed = 2;
  const Trace c = run(s.problem, s.run, s.est, s.noise);
  EXPECT_NE(a.gap, c.gap);
}

TEST(Run, AverageIsMeanOfIterates) {
  auto s = harness_setup(ProblemKind::NonsmoothNorm, Setting::Nonsmooth, 2, 0.2);
  s.run.iterations = 100;
  Vector sum = Vector::Zero(2);
  s.run.observer = [&](std::size_t, const Vector& x) { sum += x; };
  const Trace t = run(s.problem, s.run, s.est, s.noise);
  EXPECT_NEAR((t.final_point - sum / 101.0).norm(), 0.0, 1e-12);
  EXPECT_NEAR(t.gap.back(), true_gap(s.problem, t.final_point), 1e-15);
}

TEST(Run, CallsToReach) {
  Trace t;
  t.gap = {1.0, 0.5, 0.2, 0.3, 0.05};
  t.calls = {0, 2, 4, 6, 8};
  EXPECT_EQ(t.calls_to_reach(0.25), 4u);
  EXPECT_EQ(t.calls_to_reach(1.0), 0u);
  EXPECT_FALSE(t.calls_to_reach(0.01).has_value());
}

TEST(Run, RejectsInfeasibleStartAndBadEpsilon) {
  ProblemParams params;
  const Problem pb = make_problem(ProblemKind::NonsmoothNorm, 2, params);
  Problem moved = pb;
  moved.start = Vector::Constant(2, 10.0);
  RunConfig rc;
  rc.iterations = 1;
  const auto est = estimator_for_target(pb, Scheme::L2, Setting::Nonsmooth, 0.05);
  EXPECT_THROW(run(moved, rc, est, {}), InvalidConfig);
  rc.epsilon = 0.0;
  EXPECT_THROW(run(pb, rc, est, {}), InvalidConfig);
}
