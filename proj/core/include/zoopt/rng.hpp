#pragma once

#include <cstdint>
#include <random>

namespace zoopt {

/// Reproducible random stream identified by (seed, stream_id).
///
/// The engine is std::mt19937_64 initialised through std::seed_seq from the
/// four 32-bit halves of seed and stream_id. Both are specified bit-exactly by
/// the standard, and the real-valued transforms below are written out here
/// rather than taken from <random> distributions, so a given (seed, stream_id)
/// produces the same doubles on every conforming toolchain (up to libm
/// rounding in log/cos/sin).
///
/// A stream is not thread-safe; give each worker its own stream_id.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Number of raw 64-bit words consumed so far.
  std::uint64_t draws() const noexcept { return draws_; }

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_pos();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller; the second variate is cached).
  double normal();
  /// Standard exponential via inverse CDF.
  double exponential();
  /// +1 or -1 with equal probability.
  double rademacher();

  /// Independent child stream: same seed, stream_id mixed with `child`.
  RngStream split(std::uint64_t child) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace zoopt
