#include "ttake/random.hpp"

#include <stdexcept>
#include <vector>

namespace ttake {

RandomSource RandomSource::from_entropy() {
  std::random_device device;
  std::uint64_t seed = (static_cast<std::uint64_t>(device()) << 32) ^ device();
  return RandomSource(seed);
}

mpz_class RandomSource::random_bits(unsigned bits) {
  if (bits == 0) return 0;
  std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buffer(words);
  for (auto& w : buffer) w = engine_();
  unsigned spare = static_cast<unsigned>(words * 64 - bits);
  if (spare != 0) buffer.back() >>= spare;
  mpz_class out;
  // Least significant word first.
  mpz_import(out.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buffer.data());
  return out;
}

mpz_class RandomSource::below(const mpz_class& bound) {
  if (bound <= 0) throw std::invalid_argument("RandomSource::below: bound must be positive");
  if (bound == 1) return 0;
  mpz_class top = bound - 1;
  unsigned bits = static_cast<unsigned>(mpz_sizeinbase(top.get_mpz_t(), 2));
  for (;;) {
    mpz_class candidate = random_bits(bits);
    if (candidate < bound) return candidate;
  }
}

std::uint64_t RandomSource::below_u64(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RandomSource::below_u64: bound must be positive");
  // Reject the tail so every residue is equally likely.
  std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

}  // namespace ttake
