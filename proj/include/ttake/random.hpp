#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace ttake {

/// Seedable random source. Copies replay the same stream, which the DDH
/// simulator relies on to complete two interpolations identically.
/// Not thread-safe; give each thread its own instance.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Seeds from std::random_device.
  static RandomSource from_entropy();

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound) by rejection sampling. bound must be positive.
  mpz_class below(const mpz_class& bound);

  /// Uniform in [0, bound) for machine-sized bounds.
  std::uint64_t below_u64(std::uint64_t bound);

  /// Uniform integer with exactly `bits` random bits (top bit not forced).
  mpz_class random_bits(unsigned bits);

  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ttake
