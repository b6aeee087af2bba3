// Closed-form constants: kappa, second-moment bound, smoothing bias, gamma and
// noise-level rules.

#include <gtest/gtest.h>

#include <cmath>

#include "zoopt/bounds.hpp"
#include "zoopt/error.hpp"
#include "zoopt/optimizer.hpp"

using namespace zoopt;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Bisection for the level where the noise term of the bound equals the
// noiseless term, i.e. variance_bound(delta) = 2 variance_bound(0).
double bisect_threshold(Scheme s, std::size_t d, double m2, double gamma) {
  const double target = 2.0 * variance_bound(s, 2, d, m2, 0.0, gamma);
  double lo = 0.0;
  double hi = 100.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (variance_bound(s, 2, d, m2, mid, gamma) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(Kappa, L1Values) {
  EXPECT_NEAR(kappa(Scheme::L1, 2, 16), 4476.23, 0.005);
  EXPECT_NEAR(kappa(Scheme::L1, 2, 16), 48 * std::pow(1 + kSqrt2, 2) * 16, 1e-9);
  for (std::size_t d : {1u, 7u, 100u}) EXPECT_NEAR(kappa(Scheme::L1, 1, d), 279.76, 0.005);
}

TEST(Kappa, L2Values) {
  EXPECT_NEAR(kappa(Scheme::L2, 2, 3), 1.5537, 5e-5);
  EXPECT_NEAR(kappa(Scheme::L2, 2, 3), kSqrt2 * std::log(3.0), 1e-12);
  // Above e^2 the q = 2 branch of the minimum takes over.
  EXPECT_NEAR(kappa(Scheme::L2, 2, 10), 2 * kSqrt2, 1e-12);
  // q = infinity for p = 1 keeps ln d; d^{1 - 2} = 1/d.
  EXPECT_NEAR(kappa(Scheme::L2, 1, 8), kSqrt2 * std::log(8.0) / 8, 1e-12);
}

TEST(Kappa, Errors) {
  EXPECT_THROW(kappa(Scheme::L1, 3, 4), InvalidConfig);
  EXPECT_THROW(kappa(Scheme::L2, 2, 0), InvalidDimension);
}

TEST(VarianceBound, NoiselessValues) {
  EXPECT_NEAR(variance_bound(Scheme::L1, 2, 4, 1.0, 0.0, 0.1), 1119.06, 0.005);
  EXPECT_NEAR(variance_bound(Scheme::L2, 2, 10, 1.0, 0.0, 0.1), 28.284, 5e-4);
}

TEST(VarianceBound, NoiselessIndependentOfGamma) {
  for (Scheme s : {Scheme::L1, Scheme::L2}) {
    const double a = variance_bound(s, 2, 8, 1.5, 0.0, 0.01);
    EXPECT_EQ(a, variance_bound(s, 2, 8, 1.5, 0.0, 3.0));
    EXPECT_EQ(a, variance_bound(s, 2, 8, 1.5, 0.0, 0.0));
  }
}

TEST(VarianceBound, NoiseTermValues) {
  // L1: kappa (M2^2 + d^2 D^2 / (12 (1+sqrt2)^2 g^2)), d=4, M2=1, D=0.2, g=0.1.
  const double k1 = 48 * std::pow(1 + kSqrt2, 2) * 4;
  EXPECT_NEAR(variance_bound(Scheme::L1, 2, 4, 1.0, 0.2, 0.1),
              k1 * (1.0 + 16 * 0.04 / (12 * std::pow(1 + kSqrt2, 2) * 0.01)), 1e-9);
  // L2: kappa (d M2^2 + d^2 D^2 / (sqrt2 g^2)), d=4.
  const double k2 = kSqrt2 * std::log(4.0);
  EXPECT_NEAR(variance_bound(Scheme::L2, 2, 4, 1.0, 0.2, 0.1),
              k2 * (4.0 + 16 * 0.04 / (kSqrt2 * 0.01)), 1e-9);
}

TEST(VarianceBound, MonotoneInNoise) {
  for (Scheme s : {Scheme::L1, Scheme::L2}) {
    double prev = 0.0;
    for (double delta : {0.0, 0.01, 0.1, 1.0}) {
      const double v = variance_bound(s, 2, 8, 1.0, delta, 0.1);
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
}

TEST(VarianceBound, RejectsZeroGammaWithNoise) {
  EXPECT_THROW(variance_bound(Scheme::L2, 2, 4, 1.0, 0.1, 0.0), InvalidConfig);
}

TEST(SmoothingBias, Values) {
  EXPECT_NEAR(smoothing_bias_bound(Scheme::L1, Setting::Nonsmooth, 1.0, 0.1, 4), 0.1, 1e-15);
  EXPECT_NEAR(smoothing_bias_bound(Scheme::L2, Setting::Nonsmooth, 1.0, 0.1, 4), 0.1, 1e-15);
  EXPECT_NEAR(smoothing_bias_bound(Scheme::L2, Setting::Smooth, 2.0, 0.1, 4), 0.04, 1e-15);
  EXPECT_NEAR(smoothing_bias_bound(Scheme::L1, Setting::Smooth, 2.0, 0.1, 4), 0.02, 1e-15);
}

TEST(SmoothingLipschitz, Values) {
  EXPECT_NEAR(smoothing_lipschitz_grad(Scheme::L1, 1.0, 0.1, 4), 40.0, 1e-12);
  EXPECT_NEAR(smoothing_lipschitz_grad(Scheme::L2, 1.0, 0.1, 4), 20.0, 1e-12);
  EXPECT_EQ(smoothing_lipschitz_grad(Scheme::L1, 0.0, 0.1, 4), 0.0);
  EXPECT_EQ(smoothing_lipschitz_grad(Scheme::L2, 0.0, 0.1, 4), 0.0);
  EXPECT_THROW(smoothing_lipschitz_grad(Scheme::L2, 1.0, 0.0, 4), InvalidConfig);
}

TEST(GammaForTarget, Values) {
  EXPECT_NEAR(gamma_for_target(Scheme::L1, Setting::Nonsmooth, 0.1, 1.0, 4), 0.1, 1e-15);
  EXPECT_NEAR(gamma_for_target(Scheme::L2, Setting::Nonsmooth, 0.1, 1.0, 4), 0.05, 1e-15);
  EXPECT_NEAR(gamma_for_target(Scheme::L2, Setting::Smooth, 0.08, 1.0, 4), 0.2, 1e-15);
  EXPECT_THROW(gamma_for_target(Scheme::L2, Setting::Nonsmooth, 0.0, 1.0, 4), InvalidConfig);
  EXPECT_THROW(gamma_for_target(Scheme::L2, Setting::Nonsmooth, 0.1, -1.0, 4), InvalidConfig);
}

TEST(GammaForTarget, ResultingBias) {
  for (Scheme s : {Scheme::L1, Scheme::L2}) {
    for (Setting set : {Setting::Nonsmooth, Setting::Smooth}) {
      for (std::size_t d : {1u, 5u, 64u}) {
        const double g = gamma_for_target(s, set, 0.03, 1.7, d);
        // The l1 nonsmooth radius leaves the full eps to the bias, the others half.
        const double expected = s == Scheme::L1 && set == Setting::Nonsmooth ? 0.03 : 0.015;
        EXPECT_NEAR(smoothing_bias_bound(s, set, 1.7, g, d), expected, 1e-14);
      }
    }
  }
}

TEST(MaxNoiseLevel, Values) {
  // sqrt(12) (1 + sqrt2) = 8.36308...; a rounded 8.3634 would give 0.20909.
  EXPECT_NEAR(max_noise_level(Scheme::L1, Setting::Nonsmooth, 1.0, 0.1, 4, 0.1), 0.2090770, 5e-7);
  EXPECT_NEAR(max_noise_level(Scheme::L1, Setting::Nonsmooth, 1.0, 0.1, 4, 0.1), 0.20909, 2e-5);
  EXPECT_NEAR(max_noise_level(Scheme::L2, Setting::Nonsmooth, 1.0, 0.05, 4, 0.1), 0.029730,
              5e-7);
  EXPECT_EQ(max_noise_level(Scheme::L1, Setting::Nonsmooth, 1.0, 0.0, 4, 0.1), 0.0);
  EXPECT_NEAR(max_noise_level(Scheme::L2, Setting::Smooth, 1.0, 0.1, 4, 0.16), 0.2, 1e-15);
  EXPECT_THROW(max_noise_level(Scheme::L2, Setting::Nonsmooth, 1.0, -0.1, 4, 0.1),
               InvalidConfig);
  EXPECT_THROW(max_noise_level(Scheme::L2, Setting::Smooth, 1.0, 0.1, 4, 0.0), InvalidConfig);
}

TEST(MaxNoiseLevel, SolvesDominationEquality) {
  for (Scheme s : {Scheme::L1, Scheme::L2}) {
    for (std::size_t d : {2u, 4u, 32u}) {
      for (double gamma : {0.05, 0.3}) {
        const double closed = max_noise_level(s, Setting::Nonsmooth, 1.5, gamma, d, 0.1);
        EXPECT_NEAR(closed, bisect_threshold(s, d, 1.5, gamma), 1e-9 * (1 + closed));
      }
    }
  }
}
