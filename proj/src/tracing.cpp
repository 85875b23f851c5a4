#include "ttake/tracing.hpp"

#include <algorithm>
#include <string>

#include "ttake/errors.hpp"

namespace ttake {

bool verify_key(const TracingSecret& secret, const Scalar& u, std::uint64_t t, const Scalar& d) {
  if (secret.params().q <= t) return false;
  return derive_key_direct(secret, u, t).value == d;
}

namespace {

bool registered(std::span<const Scalar> registry, const Scalar& u) {
  return std::find(registry.begin(), registry.end(), u) != registry.end();
}

struct Scanner {
  const TracingSecret& secret;
  std::span<const Scalar> registry;
  TraceReport report;

  bool check(const KeyTriple& triple) {
    ++report.checked;
    if (!verify_key(secret, triple.u, triple.t, triple.d) || !registered(registry, triple.u)) {
      return false;
    }
    report.traitor = triple.u;
    report.evidence = triple;
    return true;
  }
};

}  // namespace

TraceReport trace(const PublicKey& pk, const TracingSecret& secret, const PirateDecoder& pd,
                  std::span<const Scalar> registry, std::uint64_t periods) {
  if (pk.k != secret.k() || pk.m != secret.m()) {
    throw StructuralError("public key and tracing secret shapes differ");
  }
  Scanner scan{secret, registry, {}};
  if (const auto* keys = std::get_if<PerPeriodKeys>(&pd)) {
    if (keys->entries.empty()) throw StructuralError("pirate decoder holds no keys");
    for (const auto& triple : keys->entries) {
      if (scan.check(triple)) break;
    }
    return scan.report;
  }

  const auto& form = std::get<MasterForm>(pd);
  if (!(form.master.u == form.initial.u)) {
    throw StructuralError("master key and initial key name different users");
  }
  if (form.master.z_star.size() != secret.m()) {
    throw StructuralError("master key has " + std::to_string(form.master.z_star.size()) +
                          " components, expected " + std::to_string(secret.m()));
  }
  UserKey key = as_user_key(form.initial);
  if (scan.check({key.u, 0, key.value})) return scan.report;
  for (std::uint64_t t = 1; t <= periods; ++t) {
    key = upd(upd_star(form.master, t, periods, secret.params()), key, secret.params());
    if (scan.check({key.u, t, key.value})) break;
  }
  return scan.report;
}

ForgedKey linear_attack_forge(std::span<const UserKey> coalition, std::span<const Scalar> weights,
                              const GroupParams& group) {
  if (coalition.empty()) throw ParameterError("coalition is empty");
  if (coalition.size() != weights.size()) throw ParameterError("one weight per coalition member");
  Zq zq(group);
  ForgedKey out{zq.zero(), zq.zero()};
  for (std::size_t n = 0; n < coalition.size(); ++n) {
    if (coalition[n].t != coalition.front().t) {
      throw SequencingError("coalition keys belong to different periods");
    }
    out.u = zq.add(out.u, zq.mul(weights[n], coalition[n].u));
    out.d = zq.add(out.d, zq.mul(weights[n], coalition[n].value));
  }
  return out;
}

Scalar dlog_reduction(const DlogInstance& instance, unsigned k, unsigned m, std::uint64_t t,
                      const Forger& forger, RandomSource& rng) {
  const auto& group = instance.group;
  if (k < 1) throw ParameterError("k must be at least 1");
  if (group.q <= std::uint64_t{k} + 1) throw ParameterError("group too small for k coalition members");
  if (t < 1 || group.q <= t) throw PeriodError("reduction period outside [1, q)");
  Zq zq(group);

  // Coalition IDs: k distinct nonzero scalars.
  std::vector<Scalar> ids;
  while (ids.size() < k) {
    Scalar u = zq.random_nonzero(rng);
    if (std::find(ids.begin(), ids.end(), u) == ids.end()) ids.push_back(u);
  }

  // Coalition keys d_1..d_k are uniform.
  std::vector<Scalar> d(k);
  for (auto& x : d) x = zq.random(rng);

  // Rows (u, u^2, .., u^k) and their inverse.
  const Matrix up_inv = vandermonde_inverse(ids, zq);

  // Row j of the inverse fixes a[j][0] = b'_j - log(y) * sum_i up[j][i],
  // published as g^{b'_j} / y^{sum_i up[j][i]}; everything else is 1.
  const GroupElement g = generator(group);
  const std::size_t cols = std::size_t{m} + 1;
  PublicKey pk{group, k, m, std::vector<GroupElement>(2 * std::size_t{k} * cols, GroupElement::identity())};
  pk.elements[0] = instance.y;
  for (std::size_t j = 0; j < k; ++j) {
    Scalar b_prime = zq.zero();
    Scalar row_sum = zq.zero();
    for (std::size_t i = 0; i < k; ++i) {
      b_prime = zq.add(b_prime, zq.mul(up_inv[j][i], d[i]));
      row_sum = zq.add(row_sum, up_inv[j][i]);
    }
    pk.elements[(j + 1) * cols] = div(exp(g, b_prime, group), exp(instance.y, row_sum, group), group);
  }

  std::vector<UserKey> coalition;
  coalition.reserve(k);
  for (std::size_t i = 0; i < k; ++i) coalition.push_back(UserKey{ids[i], t, d[i]});

  const ForgedKey forged = forger(pk, coalition);
  if (std::find(ids.begin(), ids.end(), forged.u) != ids.end()) {
    throw ReductionFailure("forger returned coalition member " + forged.u.to_string());
  }

  // f_t has degree k in x here; solve for b_0..b_k through k + 1 points.
  LinearSystem system;
  auto add_point = [&](const Scalar& u, const Scalar& value) {
    system.matrix.push_back(power_ladder(u, std::size_t{k} + 1, zq));
    system.rhs.push_back(value);
  };
  for (std::size_t i = 0; i < k; ++i) add_point(ids[i], d[i]);
  add_point(forged.u, forged.d);
  const LinearSolution solved = solve_linear(system, zq);
  if (solved.status != LinearSolution::Status::kUnique) {
    throw ReductionFailure("interpolation through the forged point is not unique");
  }

  // The recovered coefficients must reproduce the published elements.
  for (std::size_t i = 0; i <= k; ++i) {
    if (!(exp(g, solved.solution[i], group) == pk.elements[i * cols])) {
      throw ReductionFailure("forged key is inconsistent with the public key");
    }
  }
  return solved.solution[0];
}

}  // namespace ttake
