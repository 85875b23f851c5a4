#include "ttake/scheme.hpp"

#include <string>

#include "ttake/errors.hpp"

namespace ttake {

namespace {

Scalar period_scalar(std::uint64_t t, const GroupParams& group) {
  if (group.q <= t) throw PeriodError("period " + std::to_string(t) + " does not embed in Z_q");
  return Zq(group).from_u64(t);
}

}  // namespace

SystemParams SystemParams::make(unsigned k, std::uint64_t users, unsigned m,
                                std::uint64_t periods, const GroupParams& group) {
  SystemParams sys{static_cast<unsigned>(mpz_sizeinbase(group.q.get_mpz_t(), 2)),
                   k,
                   users,
                   m,
                   periods,
                   2 * k - 1,
                   2 * k * (m + 1) - 1};
  sys.validate(group);
  return sys;
}

void SystemParams::validate(const GroupParams& group) const {
  if (k < 1) throw ParameterError("k must be at least 1");
  if (users < 1) throw ParameterError("N must be at least 1");
  if (periods < 1) throw ParameterError("T must be at least 1");
  if (group.q <= users) throw ParameterError("N must be below q");
  if (group.q <= periods) throw ParameterError("T must be below q");
  if (per_period_exposures != 2 * k - 1) throw ParameterError("k_T must equal 2k - 1");
  if (total_exposures != 2 * k * (m + 1) - 1) throw ParameterError("m_T must equal 2k(m+1) - 1");
}

PublicKey derive_public_key(const TracingSecret& secret) {
  const auto& group = secret.params();
  PublicKey pk{group, secret.k(), secret.m(), {}};
  pk.elements.reserve(secret.coefficients().size());
  const GroupElement g = generator(group);
  for (const auto& a : secret.coefficients()) pk.elements.push_back(exp(g, a, group));
  return pk;
}

MasterKey issue_master_key(const TracingSecret& secret, const Scalar& u) {
  auto z = z_star(secret, u);
  z.erase(z.begin());
  return MasterKey{u, std::move(z)};
}

InitialKey issue_initial_key(const TracingSecret& secret, const Scalar& u) {
  return InitialKey{u, z_star(secret, u).front()};
}

UserKey as_user_key(const InitialKey& ik) { return UserKey{ik.u, 0, ik.value}; }

Setup gen_from_secret(const SystemParams& sys, const TracingSecret& secret) {
  const auto& group = secret.params();
  sys.validate(group);
  if (sys.k != secret.k() || sys.m != secret.m()) {
    throw ParameterError("secret polynomial shape does not match system parameters");
  }
  Zq zq(group);
  Setup out{derive_public_key(secret), {}, {}, secret};
  out.master_keys.reserve(sys.users);
  out.initial_keys.reserve(sys.users);
  for (std::uint64_t n = 1; n <= sys.users; ++n) {
    const Scalar u = zq.from_u64(n);
    out.master_keys.push_back(issue_master_key(secret, u));
    out.initial_keys.push_back(issue_initial_key(secret, u));
  }
  return out;
}

Setup gen(const SystemParams& sys, const GroupParams& group, RandomSource& rng) {
  sys.validate(group);
  return gen_from_secret(sys, random_poly(sys.k, sys.m, group, rng));
}

std::uint64_t upd_star_multiplications(unsigned m) { return m == 0 ? 0 : 3ULL * m - 2; }

PartialKey upd_star(const MasterKey& mk, std::uint64_t t, std::uint64_t periods,
                    const GroupParams& group) {
  if (t < 1 || t > periods) {
    throw PeriodError("period " + std::to_string(t) + " outside [1, " + std::to_string(periods) +
                      "]");
  }
  Zq zq(group);
  const Scalar now = period_scalar(t, group);
  const Scalar before = zq.sub(now, zq.one());
  // t^j and (t-1)^j ladders start at j = 1, so each costs m - 1 products.
  Scalar now_pow = now;
  Scalar before_pow = before;
  Scalar acc = zq.zero();
  for (std::size_t j = 0; j < mk.z_star.size(); ++j) {
    if (j > 0) {
      now_pow = zq.mul(now_pow, now);
      before_pow = zq.mul(before_pow, before);
    }
    acc = zq.add(acc, zq.mul(mk.z_star[j], zq.sub(now_pow, before_pow)));
  }
  return PartialKey{mk.u, t, acc};
}

UserKey upd(const PartialKey& partial, const UserKey& prev, const GroupParams& group) {
  if (!(partial.u == prev.u)) throw SequencingError("partial key and previous key belong to different users");
  if (prev.t + 1 != partial.t) {
    throw SequencingError("cannot step from period " + std::to_string(prev.t) + " with a partial key for " +
                          std::to_string(partial.t));
  }
  return UserKey{prev.u, partial.t, Zq(group).add(partial.value, prev.value)};
}

Ciphertext enc_with_exponent(const PublicKey& pk, std::uint64_t t, const GroupElement& message,
                             const Scalar& alpha) {
  const auto& group = pk.group;
  if (t < 1) throw PeriodError("encryption period must be at least 1");
  if (!is_member(message.value(), group)) throw EncodingError("message is not in the subgroup");
  Zq zq(group);
  const Scalar ts = period_scalar(t, group);
  // alpha * t^j once per column; every (i, j) then costs one exponentiation.
  std::vector<Scalar> exponents;
  exponents.reserve(pk.m + 1);
  exponents.push_back(alpha);
  for (unsigned j = 1; j <= pk.m; ++j) exponents.push_back(zq.mul(exponents.back(), ts));

  Ciphertext c{t, exp(generator(group), alpha, group), {}};
  c.z.reserve(2 * pk.k);
  for (std::size_t i = 0; i < 2 * std::size_t{pk.k}; ++i) {
    GroupElement acc = GroupElement::identity();
    for (std::size_t j = 0; j <= pk.m; ++j) acc = mul(acc, exp(pk.at(i, j), exponents[j], group), group);
    c.z.push_back(std::move(acc));
  }
  c.z.front() = mul(c.z.front(), message, group);
  return c;
}

Ciphertext enc(const PublicKey& pk, std::uint64_t t, const GroupElement& message,
               RandomSource& rng) {
  return enc_with_exponent(pk, t, message, Zq(pk.group).random(rng));
}

std::optional<GroupElement> dec(const Ciphertext& c, const UserKey& key, const GroupParams& group) {
  if (c.t != key.t || c.z.empty()) return std::nullopt;
  Zq zq(group);
  GroupElement acc = c.z.front();
  Scalar u_pow = zq.one();
  for (std::size_t i = 1; i < c.z.size(); ++i) {
    u_pow = zq.mul(u_pow, key.u);
    acc = mul(acc, exp(c.z[i], u_pow, group), group);
  }
  return div(acc, exp(c.y, key.value, group), group);
}

UserKey derive_key_direct(const TracingSecret& secret, const Scalar& u, std::uint64_t t) {
  return UserKey{u, t, eval(secret, u, period_scalar(t, secret.params()))};
}

}  // namespace ttake
