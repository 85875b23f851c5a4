#pragma once

#include <cstdint>
#include <vector>

#include "ttake/group.hpp"
#include "ttake/scheme.hpp"

namespace ttake::reference {

/// Single-period traitor tracing with f(x) = sum_{i<2k} a_i x^i and
/// public elements y_i = g^{a_i}.
struct KDSystem {
  GroupParams group;
  unsigned k;
  std::vector<GroupElement> public_elements;
  std::vector<Scalar> coeffs;
};

struct KDHeader {
  GroupElement y;
  std::vector<GroupElement> z;

  std::size_t component_count() const { return z.size() + 1; }
  bool operator==(const KDHeader&) const = default;
};

KDSystem kd_gen(unsigned k, const GroupParams& group, RandomSource& rng);
KDSystem kd_from_coefficients(unsigned k, std::vector<Scalar> coeffs, const GroupParams& group);
/// d = f(u).
Scalar kd_user_key(const KDSystem& kd, const Scalar& u);
KDHeader kd_enc(const KDSystem& kd, const GroupElement& message, RandomSource& rng);
KDHeader kd_enc_with_exponent(const KDSystem& kd, const GroupElement& message, const Scalar& r);
GroupElement kd_dec(const KDHeader& head, const Scalar& u, const Scalar& d, const GroupParams& group);

/// One-generator (m, T) key-insulated scheme.
struct DKXYSystem {
  GroupParams group;
  unsigned m;
  /// y*_0 .. y*_m.
  std::vector<GroupElement> public_elements;
  /// a*_1 .. a*_m, held by the secure device.
  std::vector<Scalar> master;
  /// SK_0 = a*_0.
  Scalar initial;
};

struct DKXYCiphertext {
  std::uint64_t t;
  GroupElement y;
  GroupElement z;
};

DKXYSystem dkxy_gen(unsigned m, const GroupParams& group, RandomSource& rng);
/// From a*_0 .. a*_m.
DKXYSystem dkxy_from_coefficients(std::vector<Scalar> coeffs, const GroupParams& group);
/// Throws PeriodError for t < 1.
Scalar dkxy_upd_star(const DKXYSystem& sys, std::uint64_t t);
Scalar dkxy_upd(const Scalar& partial, const Scalar& previous, const GroupParams& group);
/// sum_j a*_j t^j, computed directly.
Scalar dkxy_key_direct(const DKXYSystem& sys, std::uint64_t t);
DKXYCiphertext dkxy_enc(const DKXYSystem& sys, std::uint64_t t, const GroupElement& message,
                        RandomSource& rng);
GroupElement dkxy_dec(const DKXYCiphertext& c, const Scalar& key, const GroupParams& group);

/// With a_i = a[i][0], an m = 0 setup must coincide with KD: public
/// elements, user keys at every period, headers under shared randomness and
/// decryptions. Throws ParameterError when m != 0.
bool check_kd_degeneration(const SystemParams& sys, const Setup& setup, RandomSource& rng);

/// DKXY instance a*_j = z*_j(u) carved out of the main scheme for one user.
DKXYSystem dkxy_restriction(const TracingSecret& secret, const Scalar& u);

/// True iff `dkxy` reproduces user u's key chain SK_{u,0..T} and round-trips
/// a random message at every period.
bool check_dkxy_restriction(const SystemParams& sys, const Setup& setup, const DKXYSystem& dkxy,
                            const Scalar& u, RandomSource& rng);
bool check_dkxy_restriction(const SystemParams& sys, const Setup& setup, const Scalar& u,
                            RandomSource& rng);

}  // namespace ttake::reference
