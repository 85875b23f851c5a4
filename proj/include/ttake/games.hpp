#pragma once

#include <any>
#include <cstdint>
#include <optional>
#include <vector>

#include "ttake/bivariate.hpp"
#include "ttake/scheme.hpp"
#include "ttake/tracing.hpp"

namespace ttake {

/// Leaked per-period keys handed to an adversary.
struct ExposureSet {
  std::vector<KeyTriple> entries;

  bool exposes_period(std::uint64_t t) const;
  bool operator==(const ExposureSet&) const = default;
};

/// True iff |entries| <= m_T, at most k_T per period, at most m per user,
/// every (u, t) is distinct, and every slot has 1 <= u <= N, 1 <= t <= T.
bool check_bounds(const ExposureSet& ex, const SystemParams& sys);

/// Random admissible (u, t) slots, none at forbidden_period. Throws
/// CapacityError when `count` slots cannot be placed within the bounds.
std::vector<EvaluationPoint> sample_exposure_slots(const SystemParams& sys, const GroupParams& group,
                                                   std::optional<std::uint64_t> forbidden_period,
                                                   std::size_t count, RandomSource& rng);

/// Exposure set of `count` keys (default m_T) filled from f.
ExposureSet sample_exposure(const SystemParams& sys, const TracingSecret& secret,
                            std::optional<std::uint64_t> forbidden_period, RandomSource& rng,
                            std::optional<std::size_t> count = std::nullopt);

struct LrChallenge {
  std::uint64_t t_star;
  GroupElement m0;
  GroupElement m1;
  std::any sigma;
};

/// Two-phase chosen-plaintext adversary (find, guess).
class LrAdversary {
 public:
  virtual ~LrAdversary() = default;
  virtual LrChallenge find(const PublicKey& pk, const ExposureSet& exposed) = 0;
  virtual bool guess(const PublicKey& pk, const std::any& sigma, const Ciphertext& c_star) = 0;
};

struct LrGameTranscript {
  std::uint64_t t_star = 0;
  GroupElement m0;
  GroupElement m1;
  bool b = false;
  std::optional<Ciphertext> c_star;
  bool b_guess = false;
  std::any sigma;
  ExposureSet exposed;
  /// Set when find returned an inadmissible period or message; no challenge
  /// was produced and the game counts as lost.
  bool forfeit = false;
};

struct LrGameResult {
  bool won;
  LrGameTranscript transcript;
};

/// Left-or-right game over a fresh Gen. `exposure_count` defaults to m_T
/// capped at what the bounds admit while leaving one period unexposed.
LrGameResult lr_game(const SystemParams& sys, const GroupParams& group, LrAdversary& adversary,
                     RandomSource& rng, std::optional<std::size_t> exposure_count = std::nullopt);

/// Picks the first unexposed period and two random messages, then guesses
/// a coin flip.
class GuessingAdversary : public LrAdversary {
 public:
  GuessingAdversary(std::uint64_t periods, RandomSource rng) : periods_(periods), rng_(rng) {}
  LrChallenge find(const PublicKey& pk, const ExposureSet& exposed) override;
  bool guess(const PublicKey& pk, const std::any& sigma, const Ciphertext& c_star) override;

 private:
  std::uint64_t periods_;
  RandomSource rng_;
};

/// Same game over an existing setup.
LrGameResult lr_game_with_setup(const SystemParams& sys, const Setup& setup, LrAdversary& adversary,
                                RandomSource& rng, std::optional<std::size_t> exposure_count = std::nullopt);

/// Largest exposure count the bounds admit while leaving at least one
/// period untouched.
std::size_t admissible_exposure_capacity(const SystemParams& sys);

struct DDHTuple {
  enum class Kind { kDdh, kRandom };

  GroupElement g1;
  GroupElement g2;
  GroupElement h1;
  GroupElement h2;
  Kind kind;
};

/// Fixture: (g1, g1^x, h1, h1^x) for kDdh or (g1, g1^x, h1, h1^y), y != x,
/// for kRandom. Returns x alongside for test verification.
struct DDHFixture {
  DDHTuple tuple;
  Scalar log_g2;
};
DDHFixture make_ddh_tuple(const GroupParams& group, DDHTuple::Kind kind, RandomSource& rng);

enum class DdhVerdict { kDdh, kRandom };

struct SimulatorRun {
  DdhVerdict verdict = DdhVerdict::kRandom;
  bool forfeit = false;
  ExposureSet exposed;
  /// Public key as shown to the adversary; its generator is g1.
  std::optional<PublicKey> pk;
  std::optional<ExponentAffinePoly> pk_poly;
  std::optional<ExponentAffinePoly> challenge_poly;
  std::uint64_t t_star = 0;
  GroupElement m0;
  GroupElement m1;
  bool b = false;
  std::optional<Ciphertext> c_star;
};

/// Answers a DDH instance by running `adversary` against a public key and
/// challenge interpolated through 2k(m+1) - 1 random exposed keys. Never
/// computes a discrete log. Requires m >= 1 and enough periods to leave one
/// unexposed; throws CapacityError otherwise.
SimulatorRun ddh_simulator(const DDHTuple& tuple, const SystemParams& sys, const GroupParams& group,
                           LrAdversary& adversary, RandomSource& rng);

/// True iff f(target) is not determined by the exposed keys, i.e. adding the
/// target row raises the rank of the exposed monomial rows.
bool secrecy_rank_check(const ExposureSet& ex, const EvaluationPoint& target, unsigned k, unsigned m,
                        const GroupParams& group);

/// Data-size and CPU-cost counts for one (k, m).
struct CostTable {
  std::uint64_t header_elems = 0;
  std::uint64_t pk_components = 0;
  std::uint64_t user_store = 0;
  std::uint64_t upd_muls = 0;
  std::uint64_t enc_exps = 0;
  std::uint64_t dec_exps = 0;

  bool operator==(const CostTable&) const = default;
};

/// Closed forms: 2k+1, 2k(m+1)+3, m+1, m^2, 2k(m+1)+1, 2k.
CostTable cost_table(unsigned k, unsigned m);

/// Runs Gen, Upd*, Enc and Dec once each under a CostMeter and reports the
/// observed sizes and operation counts. upd_muls is the exact Upd* count.
CostTable measured_costs(unsigned k, unsigned m, const GroupParams& group, RandomSource& rng);

}  // namespace ttake
