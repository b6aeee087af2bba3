#pragma once

#include <string>
#include <string_view>

#include "zoopt/rng.hpp"

namespace zoopt {

enum class NoiseKind { None, Uniform, Gaussian, Rademacher, ConstantBias };

/// Additive oracle noise of level `delta`. Every kind satisfies E[d^2] <= delta^2:
///   uniform       on [-sqrt(3) delta, sqrt(3) delta]   (E[d^2] = delta^2)
///   gaussian      N(0, delta^2)
///   rademacher    +-delta
///   constant_bias the constant delta                   (nonzero mean)
struct NoiseSpec {
  NoiseKind kind = NoiseKind::None;
  double delta = 0.0;

  /// Throws InvalidConfig("delta") on a negative or non-finite level.
  void validate() const;
};

/// How the two noise values of one two-point estimate relate.
enum class NoisePairing {
  Independent,  ///< two independent draws (default)
  Shared,       ///< one draw used for both evaluations
  /// +|draw| sign(e_1) on the forward query and the negative on the backward
  /// one. This makes the noise depend on the direction e and is only meant as
  /// a negative control: it breaks the independence the estimators rely on.
  DirectionCorrelated,
};

double draw_noise(const NoiseSpec& spec, RngStream& rng);

std::string to_string(NoiseKind k);
NoiseKind parse_noise_kind(std::string_view text);
std::string to_string(NoisePairing p);
NoisePairing parse_noise_pairing(std::string_view text);

}  // namespace zoopt
