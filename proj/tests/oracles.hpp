#pragma once

// Independent reference arithmetic for small moduli. Uses plain 128-bit
// integer math so expected values never come from the library under test.

#include <cstdint>
#include <vector>

#include "ttake/bivariate.hpp"
#include "ttake/group.hpp"

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 e, u64 m) {
  u64 acc = 1 % m;
  for (u64 i = 0; i < e; ++i) acc = mulmod(acc, base % m, m);
  return acc;
}

inline bool is_prime_trial(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// f(u, t) = sum a[i][j] u^i t^j with naive powers, coefficients row-major.
inline u64 eval(const std::vector<u64>& a, unsigned k, unsigned m, u64 u, u64 t, u64 q) {
  u64 acc = 0;
  for (u64 i = 0; i < 2 * k; ++i)
    for (u64 j = 0; j <= m; ++j) {
      u64 term = mulmod(a[i * (m + 1) + j], mulmod(powmod(u, i, q), powmod(t, j, q), q), q);
      acc = static_cast<u64>((static_cast<u128>(acc) + term) % q);
    }
  return acc;
}

inline u64 dlog(u64 base, u64 target, u64 p, u64 q) {
  u64 acc = 1;
  for (u64 e = 0; e < q; ++e) {
    if (acc == target) return e;
    acc = mulmod(acc, base, p);
  }
  return UINT64_MAX;
}

inline u64 to_u64(const ttake::Scalar& s) { return s.value().get_ui(); }
inline u64 to_u64(const ttake::GroupElement& e) { return e.value().get_ui(); }

inline ttake::GroupParams toy_group() { return {23, 11, 2}; }

/// q = 11 system with a00 = 3, a01 = 5, a10 = 7, a11 = 2 (k = 1, m = 1).
inline ttake::BivarPoly toy_poly() {
  ttake::Zq zq(toy_group());
  return ttake::BivarPoly(1, 1, {zq.from_u64(3), zq.from_u64(5), zq.from_u64(7), zq.from_u64(2)}, toy_group());
}

}  // namespace oracle
