#include "ttake/games.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "ttake/errors.hpp"
#include "ttake/metrics.hpp"

namespace ttake {

namespace {

constexpr int kPinAttempts = 256;

struct Slot {
  std::uint64_t u;
  std::uint64_t t;
};

template <typename T>
void shuffle(std::vector<T>& items, RandomSource& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.below_u64(i)]);
  }
}

std::vector<std::uint64_t> open_periods(const SystemParams& sys, std::optional<std::uint64_t> forbidden) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 1; t <= sys.periods; ++t) {
    if (!forbidden || *forbidden != t) out.push_back(t);
  }
  return out;
}

std::size_t capacity(const SystemParams& sys, std::uint64_t open) {
  const std::uint64_t per_user = std::min<std::uint64_t>(sys.m, open);
  const std::uint64_t per_period = std::min<std::uint64_t>(sys.per_period_exposures, sys.users);
  return static_cast<std::size_t>(
      std::min({std::uint64_t{sys.total_exposures}, sys.users * per_user, open * per_period}));
}

// Random first-fit over a shuffled slot list.
std::optional<std::vector<Slot>> first_fit(const SystemParams& sys, const std::vector<std::uint64_t>& periods,
                                           std::size_t count, RandomSource& rng) {
  std::vector<Slot> slots;
  slots.reserve(sys.users * periods.size());
  for (std::uint64_t u = 1; u <= sys.users; ++u)
    for (auto t : periods) slots.push_back({u, t});
  shuffle(slots, rng);
  std::map<std::uint64_t, unsigned> per_user;
  std::map<std::uint64_t, unsigned> per_period;
  std::vector<Slot> chosen;
  for (const auto& s : slots) {
    if (chosen.size() == count) break;
    if (per_user[s.u] >= sys.m || per_period[s.t] >= sys.per_period_exposures) continue;
    ++per_user[s.u];
    ++per_period[s.t];
    chosen.push_back(s);
  }
  if (chosen.size() != count) return std::nullopt;
  return chosen;
}

// Gale-Ryser construction: spread `count` as evenly as the bounds allow
// over random users and periods, then connect each user to the periods
// with the most remaining demand.
std::optional<std::vector<Slot>> balanced_fit(const SystemParams& sys, std::vector<std::uint64_t> periods,
                                              std::size_t count, RandomSource& rng) {
  std::vector<std::uint64_t> users(sys.users);
  std::iota(users.begin(), users.end(), 1);
  shuffle(users, rng);
  shuffle(periods, rng);
  auto spread = [count](std::size_t buckets) {
    std::vector<std::size_t> d(buckets, count / buckets);
    for (std::size_t i = 0; i < count % buckets; ++i) ++d[i];
    return d;
  };
  const auto user_deg = spread(users.size());
  auto period_deg = spread(periods.size());
  std::vector<Slot> chosen;
  for (std::size_t n = 0; n < users.size(); ++n) {
    if (user_deg[n] > sys.m) return std::nullopt;
    std::vector<std::size_t> order(periods.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return period_deg[a] > period_deg[b]; });
    for (std::size_t e = 0; e < user_deg[n]; ++e) {
      if (e >= order.size() || period_deg[order[e]] == 0) return std::nullopt;
      --period_deg[order[e]];
      chosen.push_back({users[n], periods[order[e]]});
    }
  }
  return chosen;
}

bool admissible_challenge(const LrChallenge& ch, const SystemParams& sys, const GroupParams& group,
                          const ExposureSet& exposed) {
  return ch.t_star >= 1 && ch.t_star <= sys.periods && !exposed.exposes_period(ch.t_star) &&
         is_member(ch.m0.value(), group) && is_member(ch.m1.value(), group);
}

}  // namespace

bool ExposureSet::exposes_period(std::uint64_t t) const {
  return std::any_of(entries.begin(), entries.end(), [t](const KeyTriple& e) { return e.t == t; });
}

bool check_bounds(const ExposureSet& ex, const SystemParams& sys) {
  if (ex.entries.size() > sys.total_exposures) return false;
  std::map<std::string, unsigned> per_user;
  std::map<std::uint64_t, unsigned> per_period;
  std::set<std::pair<std::string, std::uint64_t>> seen;
  for (const auto& e : ex.entries) {
    if (e.t < 1 || e.t > sys.periods) return false;
    if (e.u.value() < 1 || e.u.value() > sys.users) return false;
    const std::string u = e.u.to_string();
    if (!seen.emplace(u, e.t).second) return false;
    if (++per_user[u] > sys.m) return false;
    if (++per_period[e.t] > sys.per_period_exposures) return false;
  }
  return true;
}

std::size_t admissible_exposure_capacity(const SystemParams& sys) {
  return sys.periods < 2 ? 0 : capacity(sys, sys.periods - 1);
}

std::vector<EvaluationPoint> sample_exposure_slots(const SystemParams& sys, const GroupParams& group,
                                                   std::optional<std::uint64_t> forbidden_period,
                                                   std::size_t count, RandomSource& rng) {
  const auto periods = open_periods(sys, forbidden_period);
  if (count > capacity(sys, periods.size())) {
    throw CapacityError("cannot place " + std::to_string(count) + " exposures within the bounds");
  }
  std::optional<std::vector<Slot>> slots;
  if (count == 0) slots.emplace();
  for (int attempt = 0; attempt < 64 && !slots; ++attempt) slots = first_fit(sys, periods, count, rng);
  if (!slots) slots = balanced_fit(sys, periods, count, rng);
  if (!slots) throw CapacityError("exposure placement failed for " + std::to_string(count) + " keys");

  Zq zq(group);
  std::vector<EvaluationPoint> out;
  out.reserve(slots->size());
  for (const auto& s : *slots) out.push_back({zq.from_u64(s.u), zq.from_u64(s.t)});
  return out;
}

ExposureSet sample_exposure(const SystemParams& sys, const TracingSecret& secret,
                            std::optional<std::uint64_t> forbidden_period, RandomSource& rng,
                            std::optional<std::size_t> count) {
  const auto points = sample_exposure_slots(sys, secret.params(), forbidden_period,
                                            count.value_or(sys.total_exposures), rng);
  ExposureSet out;
  out.entries.reserve(points.size());
  for (const auto& pt : points) {
    const std::uint64_t t = pt.t.value().get_ui();
    out.entries.push_back({pt.u, t, eval(secret, pt.u, pt.t)});
  }
  return out;
}

LrChallenge GuessingAdversary::find(const PublicKey& pk, const ExposureSet& exposed) {
  std::uint64_t t = 1;
  while (t < periods_ && exposed.exposes_period(t)) ++t;
  Zq zq(pk.group);
  auto message = [&] { return encode_message(mpz_class(zq.random_nonzero(rng_).value()), pk.group); };
  GroupElement m0 = message();
  GroupElement m1 = message();
  return {t, m0, m1, {}};
}

bool GuessingAdversary::guess(const PublicKey&, const std::any&, const Ciphertext&) { return rng_.coin(); }

LrGameResult lr_game_with_setup(const SystemParams& sys, const Setup& setup, LrAdversary& adversary,
                                RandomSource& rng, std::optional<std::size_t> exposure_count) {
  const auto& group = setup.pk.group;
  LrGameResult result{false, {}};
  auto& tr = result.transcript;
  // A hidden reserved period keeps at least one challenge period open.
  const std::uint64_t reserved = 1 + rng.below_u64(sys.periods);
  const std::size_t count = exposure_count.value_or(std::min<std::size_t>(
      sys.total_exposures, admissible_exposure_capacity(sys)));
  tr.exposed = sample_exposure(sys, setup.secret, reserved, rng, count);

  LrChallenge ch = adversary.find(setup.pk, tr.exposed);
  tr.t_star = ch.t_star;
  tr.m0 = ch.m0;
  tr.m1 = ch.m1;
  tr.sigma = ch.sigma;
  if (!admissible_challenge(ch, sys, group, tr.exposed)) {
    tr.forfeit = true;
    return result;
  }
  tr.b = rng.coin();
  tr.c_star = enc(setup.pk, ch.t_star, tr.b ? ch.m1 : ch.m0, rng);
  tr.b_guess = adversary.guess(setup.pk, tr.sigma, *tr.c_star);
  result.won = tr.b_guess == tr.b;
  return result;
}

LrGameResult lr_game(const SystemParams& sys, const GroupParams& group, LrAdversary& adversary,
                     RandomSource& rng, std::optional<std::size_t> exposure_count) {
  const Setup setup = gen(sys, group, rng);
  return lr_game_with_setup(sys, setup, adversary, rng, exposure_count);
}

DDHFixture make_ddh_tuple(const GroupParams& group, DDHTuple::Kind kind, RandomSource& rng) {
  Zq zq(group);
  const GroupElement g1 = random_generator(group, rng);
  const GroupElement h1 = random_generator(group, rng);
  const Scalar x = zq.random_nonzero(rng);
  Scalar y = x;
  if (kind == DDHTuple::Kind::kRandom) {
    while (y == x) y = zq.random(rng);
  }
  return {DDHTuple{g1, exp(g1, x, group), h1, exp(h1, y, group), kind}, x};
}

SimulatorRun ddh_simulator(const DDHTuple& tuple, const SystemParams& sys, const GroupParams& group,
                           LrAdversary& adversary, RandomSource& rng) {
  const std::size_t count = sys.total_exposures;
  if (count > admissible_exposure_capacity(sys)) {
    throw CapacityError("system cannot expose " + std::to_string(count) +
                        " keys and keep a challenge period open");
  }
  // The adversary sees a key whose generator is g1.
  const GroupParams shown{group.p, group.q, tuple.g1.value()};
  Zq zq(group);
  SimulatorRun run;

  const std::uint64_t reserved = 1 + rng.below_u64(sys.periods);
  // Some admissible slot sets determine a[0][0] outright (for example
  // (1,1), (2,2), (3,3) at k = m = 1), leaving no room to embed log g2.
  // Those are redrawn.
  std::vector<EvaluationPoint> points;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kPinAttempts) {
      throw InconsistentSystemError("no exposure set found that leaves a[0][0] free");
    }
    points = sample_exposure_slots(sys, group, reserved, count, rng);
    points.push_back({zq.zero(), zq.zero()});
    const bool free = rank_of_rows(points, sys.k, sys.m, zq) == points.size();
    points.pop_back();
    if (free) break;
  }
  std::vector<Constraint> constraints;
  constraints.reserve(points.size());
  for (const auto& pt : points) {
    const Scalar d = zq.random(rng);
    constraints.push_back({pt.u, pt.t, d});
    run.exposed.entries.push_back({pt.u, pt.t.value().get_ui(), d});
  }

  // Both interpolations complete free coefficients from the same stream so
  // that f' = f whenever the two logs agree.
  const RandomSource completion = rng;
  RandomSource first = completion;
  run.pk_poly = exponent_interpolate(constraints, tuple.g1, tuple.g2, sys.k, sys.m, shown, first);
  run.pk = PublicKey{shown, sys.k, sys.m, run.pk_poly->elements(shown)};

  LrChallenge ch = adversary.find(*run.pk, run.exposed);
  run.t_star = ch.t_star;
  run.m0 = ch.m0;
  run.m1 = ch.m1;
  if (!admissible_challenge(ch, sys, group, run.exposed)) {
    run.forfeit = true;
    return run;
  }

  RandomSource second = completion;
  run.challenge_poly = exponent_interpolate(constraints, tuple.h1, tuple.h2, sys.k, sys.m, shown, second);
  const auto challenge_elems = run.challenge_poly->elements(shown);
  const auto t_pow = power_ladder(zq.from_u64(ch.t_star), std::size_t{sys.m} + 1, zq);

  run.b = rng.coin();
  Ciphertext c{ch.t_star, tuple.h1, {}};
  const std::size_t cols = std::size_t{sys.m} + 1;
  for (std::size_t i = 0; i < 2 * std::size_t{sys.k}; ++i) {
    GroupElement acc = GroupElement::identity();
    for (std::size_t j = 0; j < cols; ++j) acc = mul(acc, exp(challenge_elems[i * cols + j], t_pow[j], group), group);
    c.z.push_back(std::move(acc));
  }
  c.z.front() = mul(c.z.front(), run.b ? ch.m1 : ch.m0, group);
  run.c_star = c;

  const bool b_guess = adversary.guess(*run.pk, ch.sigma, c);
  run.verdict = b_guess == run.b ? DdhVerdict::kDdh : DdhVerdict::kRandom;
  return run;
}

bool secrecy_rank_check(const ExposureSet& ex, const EvaluationPoint& target, unsigned k, unsigned m,
                        const GroupParams& group) {
  Zq zq(group);
  std::vector<EvaluationPoint> points;
  points.reserve(ex.entries.size() + 1);
  for (const auto& e : ex.entries) points.push_back({e.u, zq.from_u64(e.t)});
  const std::size_t before = rank_of_rows(points, k, m, zq);
  points.push_back(target);
  return before < rank_of_rows(points, k, m, zq);
}

CostTable cost_table(unsigned k, unsigned m) {
  const std::uint64_t kk = k;
  const std::uint64_t mm = m;
  return CostTable{2 * kk + 1, 2 * kk * (mm + 1) + 3, mm + 1, mm * mm, 2 * kk * (mm + 1) + 1, 2 * kk};
}

CostTable measured_costs(unsigned k, unsigned m, const GroupParams& group, RandomSource& rng) {
  const auto sys = SystemParams::make(k, 2, m, 2, group);
  const Setup setup = gen(sys, group, rng);
  const auto& mk = setup.master_keys.front();
  CostTable out;
  out.pk_components = setup.pk.component_count();
  out.user_store = user_store_size(mk);

  UserKey key = as_user_key(setup.initial_keys.front());
  {
    CostMeter meter;
    const PartialKey partial = upd_star(mk, 1, sys.periods, group);
    out.upd_muls = meter.counts().scalar_multiplications;
    key = upd(partial, key, group);
  }

  const GroupElement message = encode_message(mpz_class(Zq(group).random_nonzero(rng).value()), group);
  Ciphertext c;
  {
    CostMeter meter;
    c = enc(setup.pk, 1, message, rng);
    out.enc_exps = meter.counts().exponentiations;
  }
  out.header_elems = c.component_count();
  {
    CostMeter meter;
    const auto recovered = dec(c, key, group);
    out.dec_exps = meter.counts().exponentiations;
    if (!recovered || !(*recovered == message)) throw Error("instrumented round trip failed");
  }
  return out;
}

}  // namespace ttake
