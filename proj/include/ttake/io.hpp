#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ttake/games.hpp"
#include "ttake/group.hpp"
#include "ttake/scheme.hpp"
#include "ttake/tracing.hpp"

// Line-oriented `key=value` text formats. Integers are canonical decimal
// (no sign, no leading zeros), every line ends in LF, and keys appear in a
// fixed order. Parsers throw ParseError on any deviation and re-check the
// invariants of the object they build.
namespace ttake::io {

std::string emit_params(const GroupParams& params);
/// Also rejects parameters failing validate_params.
GroupParams parse_params(std::string_view text);

std::string emit_system(const SystemParams& sys);
SystemParams parse_system(std::string_view text, const GroupParams& group);

/// Params lines, then k=, m=, then y[i][j]= in row-major order.
std::string emit_public_key(const PublicKey& pk);
PublicKey parse_public_key(std::string_view text);

/// Params lines, then k=, m=, then a[i][j]= in row-major order.
std::string emit_secret(const TracingSecret& secret);
TracingSecret parse_secret(std::string_view text);

/// u=, t=, sk=.
std::string emit_user_key(const UserKey& key);
UserKey parse_user_key(std::string_view text, const GroupParams& group);

/// u=, then z[1]= .. z[m]=.
std::string emit_master_key(const MasterKey& mk);
MasterKey parse_master_key(std::string_view text, const GroupParams& group);

/// t=, y=, then z[0]= .. z[2k-1]=.
std::string emit_ciphertext(const Ciphertext& c);
Ciphertext parse_ciphertext(std::string_view text, const GroupParams& group);

/// `entry=<u>,<t>,<d>` lines, or master=<u>, z[1]= .. z[m]=, ik=.
std::string emit_pirate_decoder(const PirateDecoder& pd);
PirateDecoder parse_pirate_decoder(std::string_view text, const GroupParams& group);

/// traitor=<dec|none>, evidence_u=, evidence_t=, evidence_d=, checked=.
std::string emit_trace_report(const TraceReport& report);
TraceReport parse_trace_report(std::string_view text, const GroupParams& group);

/// `entry=<u>,<t>,<d>` lines.
std::string emit_exposure_set(const ExposureSet& ex);
ExposureSet parse_exposure_set(std::string_view text, const GroupParams& group);

struct GameSummary {
  std::uint64_t games = 0;
  std::uint64_t wins = 0;

  bool operator==(const GameSummary&) const = default;
};

/// games=, wins=, rate= (six decimals).
std::string emit_game_summary(const GameSummary& summary);
GameSummary parse_game_summary(std::string_view text);

/// header=, pk=, store=, upd=, enc=, dec=, each key prefixed by `prefix`.
std::string emit_cost_table(const CostTable& table, std::string_view prefix = "");
CostTable parse_cost_table(std::string_view text, std::string_view prefix = "");

}  // namespace ttake::io
