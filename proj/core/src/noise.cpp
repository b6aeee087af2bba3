#include "zoopt/noise.hpp"

#include <cmath>

#include "zoopt/error.hpp"

namespace zoopt {

void NoiseSpec::validate() const {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw InvalidConfig("delta", "noise level must be finite and >= 0");
  }
}

double draw_noise(const NoiseSpec& spec, RngStream& rng) {
  spec.validate();
  if (spec.delta == 0.0) return 0.0;
  switch (spec.kind) {
    case NoiseKind::None:
      return 0.0;
    case NoiseKind::Uniform: {
      const double half = std::sqrt(3.0) * spec.delta;
      return rng.uniform(-half, half);
    }
    case NoiseKind::Gaussian:
      return spec.delta * rng.normal();
    case NoiseKind::Rademacher:
      return spec.delta * rng.rademacher();
    case NoiseKind::ConstantBias:
      return spec.delta;
  }
  return 0.0;
}

std::string to_string(NoiseKind k) {
  switch (k) {
    case NoiseKind::None:
      return "none";
    case NoiseKind::Uniform:
      return "uniform";
    case NoiseKind::Gaussian:
      return "gaussian";
    case NoiseKind::Rademacher:
      return "rademacher";
    case NoiseKind::ConstantBias:
      return "constant_bias";
  }
  return "none";
}

NoiseKind parse_noise_kind(std::string_view text) {
  for (auto k : {NoiseKind::None, NoiseKind::Uniform, NoiseKind::Gaussian,
                 NoiseKind::Rademacher, NoiseKind::ConstantBias}) {
    if (text == to_string(k)) return k;
  }
  throw InvalidConfig("noise", "unknown noise kind '" + std::string(text) + "'");
}

std::string to_string(NoisePairing p) {
  switch (p) {
    case NoisePairing::Independent:
      return "independent";
    case NoisePairing::Shared:
      return "shared";
    case NoisePairing::DirectionCorrelated:
      return "direction_correlated";
  }
  return "independent";
}

NoisePairing parse_noise_pairing(std::string_view text) {
  for (auto p : {NoisePairing::Independent, NoisePairing::Shared,
                 NoisePairing::DirectionCorrelated}) {
    if (text == to_string(p)) return p;
  }
  throw InvalidConfig("pairing", "unknown noise pairing '" + std::string(text) + "'");
}

}  // namespace zoopt
