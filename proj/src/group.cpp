#include "ttake/group.hpp"

#include "ttake/errors.hpp"
#include "ttake/metrics.hpp"

namespace ttake {

namespace {

// 40 Miller-Rabin rounds bound the error by 4^-40 = 2^-80; GMP also runs
// trial division first.
constexpr int kPrimalityReps = 40;

bool is_probable_prime(const mpz_class& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), kPrimalityReps) != 0;
}

mpz_class powm(const mpz_class& base, const mpz_class& e, const mpz_class& mod) {
  mpz_class out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return out;
}

}  // namespace

Scalar Scalar::reduce(const mpz_class& v, const mpz_class& q) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return Scalar(std::move(r));
}

Scalar Zq::from_u64(std::uint64_t v) const {
  mpz_class x;
  mpz_import(x.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return from(x);
}

Scalar Zq::add(const Scalar& a, const Scalar& b) const {
  mpz_class r = a.value() + b.value();
  if (r >= q_) r -= q_;
  return from(r);
}

Scalar Zq::sub(const Scalar& a, const Scalar& b) const {
  return from(mpz_class(a.value() - b.value()));
}

Scalar Zq::neg(const Scalar& a) const { return from(mpz_class(-a.value())); }

Scalar Zq::mul(const Scalar& a, const Scalar& b) const {
  detail::count_scalar_multiplication();
  return from(mpz_class(a.value() * b.value()));
}

Scalar Zq::inv(const Scalar& a) const {
  mpz_class r;
  if (a.is_zero() || mpz_invert(r.get_mpz_t(), a.value().get_mpz_t(), q_.get_mpz_t()) == 0) {
    throw SingularityError("zero has no inverse modulo q");
  }
  return from(r);
}

Scalar Zq::random(RandomSource& rng) const { return from(rng.below(q_)); }

Scalar Zq::random_nonzero(RandomSource& rng) const {
  return from(mpz_class(rng.below(q_ - 1) + 1));
}

GroupElement GroupElement::checked(const mpz_class& v, const GroupParams& params) {
  if (!is_member(v, params)) {
    throw EncodingError("value " + v.get_str() + " is not in the order-q subgroup");
  }
  return GroupElement(v);
}

bool is_member(const mpz_class& value, const GroupParams& params) {
  if (value < 1 || value >= params.p) return false;
  return powm(value, params.q, params.p) == 1;
}

GroupParams gen_params(unsigned q_bits, RandomSource& rng) {
  if (q_bits < 4 || q_bits > 4095) {
    throw ParameterError("q_bits must lie in [4, 4095], got " + std::to_string(q_bits));
  }
  const std::uint64_t attempts = 1000 + 200ULL * q_bits * q_bits;
  const mpz_class top_bit = mpz_class(1) << (q_bits - 1);
  for (std::uint64_t i = 0; i < attempts; ++i) {
    mpz_class q = rng.random_bits(q_bits - 1) | top_bit;
    q |= 1;
    if (!is_probable_prime(q)) continue;
    mpz_class p = 2 * q + 1;
    if (!is_probable_prime(p)) continue;
    // Squares of elements other than +-1 generate the quadratic residues.
    for (;;) {
      mpz_class h = rng.below(p - 3) + 2;
      mpz_class g = h * h % p;
      if (g != 1) return GroupParams{p, q, g};
    }
  }
  throw GenerationError("no safe prime with " + std::to_string(q_bits) + "-bit q found after " +
                        std::to_string(attempts) + " candidates");
}

bool validate_params(const GroupParams& params) {
  const auto& [p, q, g] = params;
  if (!is_probable_prime(p) || !is_probable_prime(q)) return false;
  if (mpz_divisible_p(mpz_class(p - 1).get_mpz_t(), q.get_mpz_t()) == 0) return false;
  if (g <= 1 || g >= p) return false;
  return powm(g, q, p) == 1;
}

GroupElement generator(const GroupParams& params) { return GroupElement::trusted(params.g); }

GroupElement exp(const GroupElement& base, const Scalar& e, const GroupParams& params) {
  detail::count_exponentiation();
  return GroupElement::trusted(powm(base.value(), e.value(), params.p));
}

GroupElement mul(const GroupElement& a, const GroupElement& b, const GroupParams& params) {
  return GroupElement::trusted(a.value() * b.value() % params.p);
}

GroupElement inverse(const GroupElement& a, const GroupParams& params) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.value().get_mpz_t(), params.p.get_mpz_t()) == 0) {
    throw EncodingError("element has no inverse modulo p");
  }
  return GroupElement::trusted(r);
}

GroupElement div(const GroupElement& a, const GroupElement& b, const GroupParams& params) {
  return mul(a, inverse(b, params), params);
}

GroupElement random_generator(const GroupParams& params, RandomSource& rng) {
  Zq zq(params);
  return GroupElement::trusted(powm(params.g, zq.random_nonzero(rng).value(), params.p));
}

GroupElement encode_message(const mpz_class& x, const GroupParams& params) {
  if (x < 1 || x > params.q) {
    throw DomainError("message " + x.get_str() + " outside [1, " + params.q.get_str() + "]");
  }
  return GroupElement::trusted(x * x % params.p);
}

mpz_class decode_message(const GroupElement& m, const GroupParams& params) {
  const mpz_class& p = params.p;
  if (p != 2 * params.q + 1) throw EncodingError("message decoding requires p = 2q + 1");
  // p = 2q + 1 with q odd gives p = 3 (mod 4), so v^((p+1)/4) is a root.
  mpz_class root = powm(m.value(), mpz_class((p + 1) / 4), p);
  if (root * root % p != m.value() % p || m.value() == 0) {
    throw EncodingError("value " + m.to_string() + " is not a quadratic residue");
  }
  if (root > params.q) root = p - root;
  return root;
}

Scalar brute_force_dlog(const GroupParams& params, const GroupElement& base,
                        const GroupElement& target) {
  if (params.q >= kBruteForceCap) {
    throw RefusalError("group order " + params.q.get_str() + " exceeds brute-force cap");
  }
  const std::uint64_t order = params.q.get_ui();
  mpz_class acc = 1;
  for (std::uint64_t e = 0; e < order; ++e) {
    if (acc == target.value()) return Zq(params).from_u64(e);
    acc = acc * base.value() % params.p;
  }
  throw NotFoundError("no discrete logarithm of " + target.to_string() + " to base " +
                      base.to_string());
}

}  // namespace ttake
