// Additive noise models and the metered oracle.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "zoopt/error.hpp"
#include "zoopt/noise.hpp"
#include "zoopt/oracle.hpp"
#include "zoopt/rng.hpp"
#include "zoopt/stats.hpp"

using namespace zoopt;

namespace {

constexpr std::size_t kDraws = 100'000;

ScalarSummary noise_sq(const NoiseSpec& spec, std::uint64_t seed) {
  RngStream r(seed, 0);
  return mc_summary(
      [&](RngStream& g) {
        const double v = draw_noise(spec, g);
        return v * v;
      },
      kDraws, r);
}

}  // namespace

TEST(Noise, SecondMomentWithinLevel) {
  const double delta = 0.7;
  for (NoiseKind k : {NoiseKind::None, NoiseKind::Uniform, NoiseKind::Gaussian,
                      NoiseKind::Rademacher, NoiseKind::ConstantBias}) {
    const auto s = noise_sq({k, delta}, 11);
    // Sample mean of delta^2 may exceed delta^2 only by sampling error.
    EXPECT_LE(s.mean, delta * delta * (1.0 + 4.0 / std::sqrt(double(kDraws)))) << to_string(k);
  }
}

TEST(Noise, UniformRangeAndVariance) {
  RngStream r(12, 0);
  const NoiseSpec spec{NoiseKind::Uniform, 0.3};
  const double edge = std::sqrt(3.0) * 0.3;
  ScalarAccumulator acc;
  for (std::size_t i = 0; i < kDraws; ++i) {
    const double v = draw_noise(spec, r);
    ASSERT_LE(std::abs(v), edge);
    acc.add(v);
  }
  EXPECT_NEAR(edge, 0.5196, 1e-4);
  const auto s = acc.summary();
  EXPECT_LE(std::abs(s.mean), 4.0 * s.std_error);
  EXPECT_NEAR(s.variance, 0.09, 0.09 * 0.02);
}

TEST(Noise, RademacherAndBiasValues) {
  RngStream r(13, 0);
  for (int i = 0; i < 100; ++i) {
    const double v = draw_noise({NoiseKind::Rademacher, 0.25}, r);
    ASSERT_TRUE(v == 0.25 || v == -0.25);
    ASSERT_EQ(draw_noise({NoiseKind::ConstantBias, 0.25}, r), 0.25);
    ASSERT_EQ(draw_noise({NoiseKind::None, 0.25}, r), 0.0);
  }
}

TEST(Noise, GaussianMoments) {
  const auto s = noise_sq({NoiseKind::Gaussian, 2.0}, 14);
  EXPECT_NEAR(s.mean, 4.0, 4.0 * s.std_error);
}

TEST(Noise, NegativeOrNonFiniteLevelRejected) {
  EXPECT_THROW((NoiseSpec{NoiseKind::Gaussian, -0.1}.validate()), InvalidConfig);
  EXPECT_THROW((NoiseSpec{NoiseKind::Gaussian, std::nan("")}.validate()), InvalidConfig);
  EXPECT_NO_THROW((NoiseSpec{NoiseKind::Gaussian, 0.0}.validate()));
  try {
    NoiseSpec{NoiseKind::Uniform, -1.0}.validate();
    FAIL();
  } catch (const InvalidConfig& e) {
    EXPECT_EQ(e.key(), "delta");
  }
}

TEST(Noise, NamesRoundTrip) {
  for (NoiseKind k : {NoiseKind::None, NoiseKind::Uniform, NoiseKind::Gaussian,
                      NoiseKind::Rademacher, NoiseKind::ConstantBias}) {
    EXPECT_EQ(parse_noise_kind(to_string(k)), k);
  }
  for (NoisePairing p :
       {NoisePairing::Independent, NoisePairing::Shared, NoisePairing::DirectionCorrelated}) {
    EXPECT_EQ(parse_noise_pairing(to_string(p)), p);
  }
  EXPECT_THROW(parse_noise_kind("pink"), InvalidConfig);
}

TEST(Oracle, NoiselessNormValue) {
  auto f = FunctionObjective::deterministic(2, [](const Vector& x) { return x.norm(); });
  NoisyOracle oracle(f, {NoiseKind::None, 0.0});
  RngStream r(1, 0);
  Vector x(2);
  x << 3, 4;
  EXPECT_EQ(oracle.query(x, r), 5.0);
  EXPECT_EQ(oracle.calls(), 1u);
}

TEST(Oracle, StochasticLinearAveragesToMean) {
  // f(x, xi) = <c + xi, x>, xi ~ N(0, I).
  constexpr std::size_t d = 3;
  Vector c(3);
  c << 1.0, -2.0, 0.5;
  auto f = std::make_shared<FunctionObjective>(
      d, [c](const Vector& x, const Vector& xi) { return (c + xi).dot(x); },
      [](RngStream& g) {
        Vector xi(3);
        for (auto& v : xi) v = g.normal();
        return xi;
      });
  NoisyOracle oracle(f, {NoiseKind::Gaussian, 0.5});
  Vector x(3);
  x << 2.0, 1.0, -4.0;
  RngStream r(2, 0);
  const auto s = mc_summary([&](RngStream& g) { return oracle.query(x, g); }, kDraws, r);
  EXPECT_NEAR(s.mean, c.dot(x), 4.0 * s.std_error);
  EXPECT_EQ(oracle.calls(), kDraws);
}

TEST(Oracle, CounterResets) {
  auto f = FunctionObjective::deterministic(1, [](const Vector& x) { return x[0]; });
  NoisyOracle oracle(f, {});
  const Vector x = Vector::Zero(1);
  for (int i = 0; i < 7; ++i) oracle.query_at(x, Vector(), 0.0);
  EXPECT_EQ(oracle.calls(), 7u);
  oracle.reset_counter();
  EXPECT_EQ(oracle.calls(), 0u);
}

TEST(Oracle, QueryAtAddsGivenNoise) {
  auto f = FunctionObjective::deterministic(1, [](const Vector& x) { return 2.0 * x[0]; });
  NoisyOracle oracle(f, {NoiseKind::Gaussian, 1.0});
  EXPECT_EQ(oracle.query_at(Vector::Ones(1), Vector(), 0.25), 2.25);
}

TEST(Oracle, NonFiniteValueRaises) {
  auto f = FunctionObjective::deterministic(
      1, [](const Vector&) { return std::numeric_limits<double>::infinity(); });
  NoisyOracle oracle(f, {});
  RngStream r(3, 0);
  EXPECT_THROW(oracle.query(Vector::Zero(1), r), EvaluationError);
}

TEST(Oracle, SeparateStreamsKeepXiSequenceFixed) {
  // Noise consumption must not shift the xi sequence when streams are split.
  auto f = std::make_shared<FunctionObjective>(
      1, [](const Vector&, const Vector& xi) { return xi[0]; },
      [](RngStream& g) { return Vector::Constant(1, g.uniform()); });
  NoisyOracle quiet(f, {NoiseKind::None, 0.0});
  NoisyOracle loud(f, {NoiseKind::Gaussian, 0.0});
  RngStream xi_a(5, 1), noise_a(5, 2);
  RngStream xi_b(5, 1), noise_b(5, 2);
  for (int i = 0; i < 100; ++i) {
    ASSERT_EQ(quiet.query(Vector::Zero(1), xi_a, noise_a),
              loud.query(Vector::Zero(1), xi_b, noise_b));
  }
  EXPECT_EQ(xi_a.draws(), xi_b.draws());
}
