#include "ttake/reference.hpp"

#include <string>

#include "ttake/bivariate.hpp"
#include "ttake/errors.hpp"

namespace ttake::reference {

namespace {

std::vector<GroupElement> powers_of_g(const std::vector<Scalar>& exponents, const GroupParams& group) {
  std::vector<GroupElement> out;
  out.reserve(exponents.size());
  for (const auto& a : exponents) out.push_back(exp(generator(group), a, group));
  return out;
}

GroupElement random_message(const GroupParams& group, RandomSource& rng) {
  return encode_message(mpz_class(Zq(group).random_nonzero(rng).value()), group);
}

}  // namespace

KDSystem kd_from_coefficients(unsigned k, std::vector<Scalar> coeffs, const GroupParams& group) {
  if (k < 1 || coeffs.size() != 2 * std::size_t{k}) {
    throw ParameterError("KD needs 2k coefficients with k >= 1");
  }
  auto elems = powers_of_g(coeffs, group);
  return KDSystem{group, k, std::move(elems), std::move(coeffs)};
}

KDSystem kd_gen(unsigned k, const GroupParams& group, RandomSource& rng) {
  Zq zq(group);
  std::vector<Scalar> coeffs(2 * std::size_t{k});
  for (auto& a : coeffs) a = zq.random(rng);
  return kd_from_coefficients(k, std::move(coeffs), group);
}

Scalar kd_user_key(const KDSystem& kd, const Scalar& u) {
  return UnivarPoly{kd.coeffs}.eval(u, Zq(kd.group));
}

KDHeader kd_enc_with_exponent(const KDSystem& kd, const GroupElement& message, const Scalar& r) {
  const auto& group = kd.group;
  if (!is_member(message.value(), group)) throw EncodingError("message is not in the subgroup");
  KDHeader head{exp(generator(group), r, group), {}};
  head.z.reserve(kd.public_elements.size());
  for (const auto& y : kd.public_elements) head.z.push_back(exp(y, r, group));
  head.z.front() = mul(message, head.z.front(), group);
  return head;
}

KDHeader kd_enc(const KDSystem& kd, const GroupElement& message, RandomSource& rng) {
  return kd_enc_with_exponent(kd, message, Zq(kd.group).random(rng));
}

GroupElement kd_dec(const KDHeader& head, const Scalar& u, const Scalar& d, const GroupParams& group) {
  Zq zq(group);
  GroupElement acc = head.z.front();
  Scalar u_pow = zq.one();
  for (std::size_t j = 1; j < head.z.size(); ++j) {
    u_pow = zq.mul(u_pow, u);
    acc = mul(acc, exp(head.z[j], u_pow, group), group);
  }
  return div(acc, exp(head.y, d, group), group);
}

DKXYSystem dkxy_from_coefficients(std::vector<Scalar> coeffs, const GroupParams& group) {
  if (coeffs.empty()) throw ParameterError("DKXY needs at least a*_0");
  DKXYSystem sys{group, static_cast<unsigned>(coeffs.size() - 1), powers_of_g(coeffs, group),
                 std::vector<Scalar>(coeffs.begin() + 1, coeffs.end()), coeffs.front()};
  return sys;
}

DKXYSystem dkxy_gen(unsigned m, const GroupParams& group, RandomSource& rng) {
  Zq zq(group);
  std::vector<Scalar> coeffs(std::size_t{m} + 1);
  for (auto& a : coeffs) a = zq.random(rng);
  return dkxy_from_coefficients(std::move(coeffs), group);
}

Scalar dkxy_upd_star(const DKXYSystem& sys, std::uint64_t t) {
  if (t < 1) throw PeriodError("DKXY update period must be at least 1");
  Zq zq(sys.group);
  const Scalar now = zq.from_u64(t);
  const Scalar before = zq.from_u64(t - 1);
  Scalar now_pow = zq.one();
  Scalar before_pow = zq.one();
  Scalar acc = zq.zero();
  for (const auto& a : sys.master) {
    now_pow = zq.mul(now_pow, now);
    before_pow = zq.mul(before_pow, before);
    acc = zq.add(acc, zq.mul(a, zq.sub(now_pow, before_pow)));
  }
  return acc;
}

Scalar dkxy_upd(const Scalar& partial, const Scalar& previous, const GroupParams& group) {
  return Zq(group).add(partial, previous);
}

Scalar dkxy_key_direct(const DKXYSystem& sys, std::uint64_t t) {
  std::vector<Scalar> coeffs{sys.initial};
  coeffs.insert(coeffs.end(), sys.master.begin(), sys.master.end());
  Zq zq(sys.group);
  return UnivarPoly{coeffs}.eval(zq.from_u64(t), zq);
}

DKXYCiphertext dkxy_enc(const DKXYSystem& sys, std::uint64_t t, const GroupElement& message,
                        RandomSource& rng) {
  const auto& group = sys.group;
  if (!is_member(message.value(), group)) throw EncodingError("message is not in the subgroup");
  Zq zq(group);
  const auto t_pow = power_ladder(zq.from_u64(t), sys.public_elements.size(), zq);
  GroupElement y_t = GroupElement::identity();
  for (std::size_t j = 0; j < sys.public_elements.size(); ++j) {
    y_t = mul(y_t, exp(sys.public_elements[j], t_pow[j], group), group);
  }
  const Scalar alpha = zq.random(rng);
  return DKXYCiphertext{t, exp(generator(group), alpha, group), mul(exp(y_t, alpha, group), message, group)};
}

GroupElement dkxy_dec(const DKXYCiphertext& c, const Scalar& key, const GroupParams& group) {
  return div(c.z, exp(c.y, key, group), group);
}

bool check_kd_degeneration(const SystemParams& sys, const Setup& setup, RandomSource& rng) {
  if (sys.m != 0 || setup.secret.m() != 0) {
    throw ParameterError("KD comparison needs m = 0, got m = " + std::to_string(setup.secret.m()));
  }
  const auto& group = setup.pk.group;
  Zq zq(group);
  std::vector<Scalar> coeffs;
  for (std::size_t i = 0; i < setup.secret.rows(); ++i) coeffs.push_back(setup.secret.at(i, 0));
  const KDSystem kd = kd_from_coefficients(setup.secret.k(), coeffs, group);

  if (kd.public_elements != setup.pk.elements) return false;
  for (std::size_t n = 0; n < setup.initial_keys.size(); ++n) {
    const auto& ik = setup.initial_keys[n];
    const Scalar d = kd_user_key(kd, ik.u);
    UserKey key = as_user_key(ik);
    if (!(key.value == d)) return false;
    for (std::uint64_t t = 1; t <= sys.periods; ++t) {
      key = upd(upd_star(setup.master_keys[n], t, sys.periods, group), key, group);
      if (!(key.value == d)) return false;

      const GroupElement message = random_message(group, rng);
      const Scalar r = zq.random(rng);
      const Ciphertext c = enc_with_exponent(setup.pk, t, message, r);
      const KDHeader head = kd_enc_with_exponent(kd, message, r);
      if (!(c.y == head.y) || c.z != head.z) return false;
      const auto ours = dec(c, key, group);
      if (!ours || !(*ours == message) || !(kd_dec(head, ik.u, d, group) == message)) return false;
    }
  }
  return true;
}

DKXYSystem dkxy_restriction(const TracingSecret& secret, const Scalar& u) {
  return dkxy_from_coefficients(z_star(secret, u), secret.params());
}

bool check_dkxy_restriction(const SystemParams& sys, const Setup& setup, const DKXYSystem& dkxy,
                            const Scalar& u, RandomSource& rng) {
  const auto& group = setup.pk.group;
  const MasterKey mk = issue_master_key(setup.secret, u);
  UserKey key = as_user_key(issue_initial_key(setup.secret, u));
  Scalar dkxy_key = dkxy.initial;
  if (!(dkxy_key == key.value)) return false;
  for (std::uint64_t t = 1; t <= sys.periods; ++t) {
    key = upd(upd_star(mk, t, sys.periods, group), key, group);
    dkxy_key = dkxy_upd(dkxy_upd_star(dkxy, t), dkxy_key, group);
    if (!(dkxy_key == key.value)) return false;
    const GroupElement message = random_message(group, rng);
    if (!(dkxy_dec(dkxy_enc(dkxy, t, message, rng), dkxy_key, group) == message)) return false;
  }
  return true;
}

bool check_dkxy_restriction(const SystemParams& sys, const Setup& setup, const Scalar& u,
                            RandomSource& rng) {
  return check_dkxy_restriction(sys, setup, dkxy_restriction(setup.secret, u), u, rng);
}

}  // namespace ttake::reference
