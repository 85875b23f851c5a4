#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ttake/random.hpp"

namespace ttake {

/// Order-q subgroup of Z_p^* generated by g. Generated parameters always use
/// a safe prime p = 2q + 1, so the subgroup is the quadratic residues.
struct GroupParams {
  mpz_class p;
  mpz_class q;
  mpz_class g;

  bool operator==(const GroupParams& o) const { return p == o.p && q == o.q && g == o.g; }
};

/// Element of Z_q, always reduced.
class Scalar {
 public:
  Scalar() = default;

  /// Reduces v modulo q (negative values wrap).
  static Scalar reduce(const mpz_class& v, const mpz_class& q);

  const mpz_class& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::string to_string() const { return value_.get_str(); }

  bool operator==(const Scalar& o) const { return value_ == o.value_; }
  bool operator<(const Scalar& o) const { return value_ < o.value_; }

 private:
  explicit Scalar(mpz_class v) : value_(std::move(v)) {}
  mpz_class value_{0};
};

/// Arithmetic in Z_q. Multiplications are charged to the active CostMeter.
class Zq {
 public:
  explicit Zq(mpz_class q) : q_(std::move(q)) {}
  explicit Zq(const GroupParams& params) : q_(params.q) {}

  const mpz_class& modulus() const { return q_; }

  Scalar from(const mpz_class& v) const { return Scalar::reduce(v, q_); }
  Scalar from_u64(std::uint64_t v) const;
  Scalar zero() const { return Scalar{}; }
  Scalar one() const { return from_u64(1); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  /// Multiplicative inverse; throws SingularityError on zero.
  Scalar inv(const Scalar& a) const;

  Scalar random(RandomSource& rng) const;
  /// Uniform in [1, q).
  Scalar random_nonzero(RandomSource& rng) const;

 private:
  mpz_class q_;
};

/// Element of Z_p^*. Construction through `checked` enforces subgroup
/// membership; `trusted` skips it for values produced by group operations.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement checked(const mpz_class& v, const GroupParams& params);
  static GroupElement trusted(mpz_class v) { return GroupElement(std::move(v)); }
  static GroupElement identity() { return GroupElement(1); }

  const mpz_class& value() const { return value_; }
  std::string to_string() const { return value_.get_str(); }

  bool operator==(const GroupElement& o) const { return value_ == o.value_; }

 private:
  explicit GroupElement(mpz_class v) : value_(std::move(v)) {}
  mpz_class value_{1};
};

/// Fresh safe-prime parameters with |q| = q_bits. Throws GenerationError
/// after a bounded number of candidates and ParameterError for q_bits < 4.
GroupParams gen_params(unsigned q_bits, RandomSource& rng);

/// True iff p and q are prime, q | p - 1, g != 1 and g^q = 1 (mod p).
bool validate_params(const GroupParams& params);

/// value^q == 1 (mod p) and value in [1, p).
bool is_member(const mpz_class& value, const GroupParams& params);

GroupElement generator(const GroupParams& params);

/// base^e mod p; charged as one exponentiation.
GroupElement exp(const GroupElement& base, const Scalar& e, const GroupParams& params);
GroupElement mul(const GroupElement& a, const GroupElement& b, const GroupParams& params);
GroupElement inverse(const GroupElement& a, const GroupParams& params);
/// a / b.
GroupElement div(const GroupElement& a, const GroupElement& b, const GroupParams& params);

/// Uniform element of the subgroup other than the identity.
GroupElement random_generator(const GroupParams& params, RandomSource& rng);

/// x in [1, q] -> x^2 mod p. Requires p = 2q + 1.
GroupElement encode_message(const mpz_class& x, const GroupParams& params);
/// Inverse of encode_message: the square root lying in [1, q].
mpz_class decode_message(const GroupElement& m, const GroupParams& params);

/// Largest q accepted by brute_force_dlog.
inline constexpr std::uint64_t kBruteForceCap = std::uint64_t{1} << 24;

/// Exhaustive discrete log of target to base. Test oracle only.
Scalar brute_force_dlog(const GroupParams& params, const GroupElement& base,
                        const GroupElement& target);

}  // namespace ttake
