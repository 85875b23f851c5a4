#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ttake/scheme.hpp"

namespace ttake {

/// A (user, period, key value) triple as found in a decoder or leaked.
struct KeyTriple {
  Scalar u;
  std::uint64_t t;
  Scalar d;

  bool operator==(const KeyTriple&) const = default;
};

/// Decoder carrying explicit per-period keys.
struct PerPeriodKeys {
  std::vector<KeyTriple> entries;

  bool operator==(const PerPeriodKeys&) const = default;
};

/// Decoder carrying a user's device master key and initial key.
struct MasterForm {
  MasterKey master;
  InitialKey initial;

  bool operator==(const MasterForm&) const = default;
};

/// Confiscated decoder contents, inspected directly (non-black-box).
using PirateDecoder = std::variant<PerPeriodKeys, MasterForm>;

struct TraceReport {
  std::optional<Scalar> traitor;
  std::optional<KeyTriple> evidence;
  std::size_t checked = 0;

  bool operator==(const TraceReport&) const = default;
};

/// d == f(u, t) (mod q). Period 0 checks initial keys.
bool verify_key(const TracingSecret& secret, const Scalar& u, std::uint64_t t, const Scalar& d);

/// Scans the decoder in order and names the first registered user whose key
/// verifies. Master-form decoders are checked at t = 0 with the initial key
/// and then at each period 1..periods along the reconstructed update chain.
/// Throws StructuralError for empty or mis-shaped decoders.
TraceReport trace(const PublicKey& pk, const TracingSecret& secret, const PirateDecoder& pd,
                  std::span<const Scalar> registry, std::uint64_t periods);

struct ForgedKey {
  Scalar u;
  Scalar d;
};

/// Weighted combination of coalition keys sharing one period:
/// u = sum c_i u_i, d = sum c_i SK_i. Throws SequencingError on mixed periods
/// and ParameterError on a size mismatch or empty coalition.
ForgedKey linear_attack_forge(std::span<const UserKey> coalition, std::span<const Scalar> weights,
                              const GroupParams& group);

/// Instance (g, p, q, y) of the discrete-log problem.
struct DlogInstance {
  GroupParams group;
  GroupElement y;
};

/// Adversary that, given a public key and k coalition keys for one period,
/// claims a key (u_p, d_p) for the same period outside the coalition.
using Forger = std::function<ForgedKey(const PublicKey&, std::span<const UserKey>)>;

/// Turns a successful forger into log_g y. Builds a public key with
/// a[0][0] = log_g y planted through y, hands the forger k consistent
/// coalition keys for period t, then interpolates f_t through the k + 1
/// points. Throws ReductionFailure when the forger answers with a coalition
/// ID or a point inconsistent with the planted key.
Scalar dlog_reduction(const DlogInstance& instance, unsigned k, unsigned m, std::uint64_t t,
                      const Forger& forger, RandomSource& rng);

}  // namespace ttake
