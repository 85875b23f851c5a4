#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ttake/bivariate.hpp"
#include "ttake/group.hpp"
#include "ttake/random.hpp"

namespace ttake {

/// Bounds of a (k, N, m, T, 2k-1, 2k(m+1)-1) instance.
struct SystemParams {
  unsigned security_bits;        // |q|
  unsigned k;                    // coalition bound
  std::uint64_t users;           // N
  unsigned m;                    // exposures per user
  std::uint64_t periods;         // T
  unsigned per_period_exposures; // k_T = 2k - 1
  unsigned total_exposures;      // m_T = 2k(m+1) - 1

  /// Derives k_T and m_T and validates against the group. Throws
  /// ParameterError.
  static SystemParams make(unsigned k, std::uint64_t users, unsigned m, std::uint64_t periods,
                           const GroupParams& group);

  void validate(const GroupParams& group) const;

  bool operator==(const SystemParams&) const = default;
};

using TracingSecret = BivarPoly;

struct PublicKey {
  GroupParams group;
  unsigned k;
  unsigned m;
  /// g^{a[i][j]} in row-major (i, j) order.
  std::vector<GroupElement> elements;

  const GroupElement& at(std::size_t i, std::size_t j) const { return elements[i * (m + 1) + j]; }
  /// Counts (g, p, q) along with the 2k(m+1) elements.
  std::size_t component_count() const { return elements.size() + 3; }

  bool operator==(const PublicKey&) const = default;
};

/// SK*_u: z*_1 .. z*_m, held by the user's secure device.
struct MasterKey {
  Scalar u;
  std::vector<Scalar> z_star;

  bool operator==(const MasterKey&) const = default;
};

/// SK_{u,0}.
struct InitialKey {
  Scalar u;
  Scalar value;

  bool operator==(const InitialKey&) const = default;
};

/// SK'_{u,t}, sent from the secure device to the portable memory.
struct PartialKey {
  Scalar u;
  std::uint64_t t;
  Scalar value;
};

/// SK_{u,t}.
struct UserKey {
  Scalar u;
  std::uint64_t t;
  Scalar value;

  bool operator==(const UserKey&) const = default;
};

/// <t, y, z_{t,0} .. z_{t,2k-1}>.
struct Ciphertext {
  std::uint64_t t;
  GroupElement y;
  std::vector<GroupElement> z;

  /// Header elements: y plus the z components.
  std::size_t component_count() const { return z.size() + 1; }

  bool operator==(const Ciphertext&) const = default;
};

/// Everything Gen hands out. User n (0-based) has ID n + 1.
struct Setup {
  PublicKey pk;
  std::vector<MasterKey> master_keys;
  std::vector<InitialKey> initial_keys;
  TracingSecret secret;
};

Setup gen(const SystemParams& sys, const GroupParams& group, RandomSource& rng);
/// Gen with a caller-chosen secret polynomial.
Setup gen_from_secret(const SystemParams& sys, const TracingSecret& secret);

PublicKey derive_public_key(const TracingSecret& secret);
MasterKey issue_master_key(const TracingSecret& secret, const Scalar& u);
InitialKey issue_initial_key(const TracingSecret& secret, const Scalar& u);

/// Treats the initial key as the period-0 user key.
UserKey as_user_key(const InitialKey& ik);

/// Device-side update. Throws PeriodError unless 1 <= t <= periods.
PartialKey upd_star(const MasterKey& mk, std::uint64_t t, std::uint64_t periods,
                    const GroupParams& group);

/// SK_{u,t} = SK'_{u,t} + SK_{u,t-1}. Throws SequencingError.
UserKey upd(const PartialKey& partial, const UserKey& prev, const GroupParams& group);

/// Scalar multiplications upd_star performs for a given m: 3m - 2 (0 at m = 0).
std::uint64_t upd_star_multiplications(unsigned m);

/// Throws PeriodError for t outside [1, q) and EncodingError when M is not
/// in the subgroup.
Ciphertext enc(const PublicKey& pk, std::uint64_t t, const GroupElement& message,
               RandomSource& rng);
/// Enc with explicit randomness alpha.
Ciphertext enc_with_exponent(const PublicKey& pk, std::uint64_t t, const GroupElement& message,
                             const Scalar& alpha);

/// Returns std::nullopt (the failure symbol) when the key and header periods
/// differ or the header is empty. A key with the right label but the wrong
/// value yields an unrelated group element.
std::optional<GroupElement> dec(const Ciphertext& c, const UserKey& key,
                                const GroupParams& group);

/// f(u, t) evaluated directly, bypassing the update chain.
UserKey derive_key_direct(const TracingSecret& secret, const Scalar& u, std::uint64_t t);

/// Portable plus device state, in scalars: m + 1.
inline std::size_t user_store_size(const MasterKey& mk) { return mk.z_star.size() + 1; }

}  // namespace ttake
