#include "ttake/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

#include "ttake/errors.hpp"

namespace ttake::io {

namespace {

std::string line(std::string_view key, const std::string& value) {
  std::string out;
  out.reserve(key.size() + value.size() + 2);
  out.append(key).append("=").append(value).append("\n");
  return out;
}

std::string line(std::string_view key, std::uint64_t value) { return line(key, std::to_string(value)); }

std::string indexed(std::string_view name, std::size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

std::string indexed(std::string_view name, std::size_t i, std::size_t j) {
  return indexed(name, i) + "[" + std::to_string(j) + "]";
}

bool canonical_decimal(std::string_view s) {
  if (s.empty()) return false;
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) return false;
  return s.size() == 1 || s.front() != '0';
}

mpz_class parse_big(std::string_view s, std::string_view key) {
  if (!canonical_decimal(s)) {
    throw ParseError("field '" + std::string(key) + "' is not a canonical decimal: '" + std::string(s) + "'");
  }
  return mpz_class(std::string(s), 10);
}

std::uint64_t parse_u64(std::string_view s, std::string_view key) {
  std::uint64_t out = 0;
  if (!canonical_decimal(s)) {
    throw ParseError("field '" + std::string(key) + "' is not a canonical decimal: '" + std::string(s) + "'");
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("field '" + std::string(key) + "' out of range");
  }
  return out;
}

Scalar parse_scalar(std::string_view s, std::string_view key, const GroupParams& group) {
  mpz_class v = parse_big(s, key);
  if (v >= group.q) throw ParseError("field '" + std::string(key) + "' is not reduced modulo q");
  return Zq(group).from(v);
}

GroupElement parse_element(std::string_view s, std::string_view key, const GroupParams& group) {
  mpz_class v = parse_big(s, key);
  if (!is_member(v, group)) throw ParseError("field '" + std::string(key) + "' is not in the subgroup");
  return GroupElement::trusted(v);
}

// Sequential reader over key=value lines.
class Reader {
 public:
  explicit Reader(std::string_view text) {
    if (!text.empty() && text.back() != '\n') throw ParseError("input is not LF-terminated");
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      std::string_view raw = text.substr(start, end - start);
      if (raw.find('\r') != std::string_view::npos) throw ParseError("carriage return in input");
      std::size_t eq = raw.find('=');
      if (eq == std::string_view::npos) throw ParseError("line without '=': '" + std::string(raw) + "'");
      lines_.push_back({raw.substr(0, eq), raw.substr(eq + 1)});
      start = end + 1;
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  std::string_view peek_key() const { return done() ? std::string_view{} : lines_[pos_].first; }

  std::string_view expect(std::string_view key) {
    if (done()) throw ParseError("missing field '" + std::string(key) + "'");
    const auto& [k, v] = lines_[pos_];
    if (k != key) throw ParseError("expected field '" + std::string(key) + "', found '" + std::string(k) + "'");
    ++pos_;
    return v;
  }

  void finish() const {
    if (!done()) throw ParseError("unexpected trailing field '" + std::string(lines_[pos_].first) + "'");
  }

 private:
  std::vector<std::pair<std::string_view, std::string_view>> lines_;
  std::size_t pos_ = 0;
};

GroupParams read_params(Reader& in) {
  GroupParams params;
  params.p = parse_big(in.expect("p"), "p");
  params.q = parse_big(in.expect("q"), "q");
  params.g = parse_big(in.expect("g"), "g");
  if (!validate_params(params)) throw ParseError("group parameters fail validation");
  return params;
}

unsigned read_small(Reader& in, std::string_view key) {
  std::uint64_t v = parse_u64(in.expect(key), key);
  if (v > 1'000'000) throw ParseError("field '" + std::string(key) + "' is implausibly large");
  return static_cast<unsigned>(v);
}

std::string emit_triple(const KeyTriple& e) {
  return e.u.to_string() + "," + std::to_string(e.t) + "," + e.d.to_string();
}

KeyTriple parse_triple(std::string_view s, const GroupParams& group) {
  std::size_t a = s.find(',');
  std::size_t b = a == std::string_view::npos ? a : s.find(',', a + 1);
  if (b == std::string_view::npos || s.find(',', b + 1) != std::string_view::npos) {
    throw ParseError("entry must have the form <u>,<t>,<d>");
  }
  return KeyTriple{parse_scalar(s.substr(0, a), "entry.u", group),
                   parse_u64(s.substr(a + 1, b - a - 1), "entry.t"),
                   parse_scalar(s.substr(b + 1), "entry.d", group)};
}

std::vector<KeyTriple> read_entries(Reader& in, const GroupParams& group) {
  std::vector<KeyTriple> out;
  while (!in.done()) out.push_back(parse_triple(in.expect("entry"), group));
  return out;
}

}  // namespace

std::string emit_params(const GroupParams& params) {
  return line("p", params.p.get_str()) + line("q", params.q.get_str()) + line("g", params.g.get_str());
}

GroupParams parse_params(std::string_view text) {
  Reader in(text);
  GroupParams params = read_params(in);
  in.finish();
  return params;
}

std::string emit_system(const SystemParams& sys) {
  return line("s", sys.security_bits) + line("k", sys.k) + line("N", sys.users) + line("m", sys.m) +
         line("T", sys.periods) + line("k_T", sys.per_period_exposures) + line("m_T", sys.total_exposures);
}

SystemParams parse_system(std::string_view text, const GroupParams& group) {
  Reader in(text);
  SystemParams sys{};
  sys.security_bits = read_small(in, "s");
  sys.k = read_small(in, "k");
  sys.users = parse_u64(in.expect("N"), "N");
  sys.m = read_small(in, "m");
  sys.periods = parse_u64(in.expect("T"), "T");
  sys.per_period_exposures = read_small(in, "k_T");
  sys.total_exposures = read_small(in, "m_T");
  in.finish();
  try {
    sys.validate(group);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("system parameters invalid: ") + e.what());
  }
  if (sys.security_bits != mpz_sizeinbase(group.q.get_mpz_t(), 2)) {
    throw ParseError("security parameter does not match |q|");
  }
  return sys;
}

std::string emit_public_key(const PublicKey& pk) {
  std::string out = emit_params(pk.group) + line("k", pk.k) + line("m", pk.m);
  for (std::size_t i = 0; i < 2 * std::size_t{pk.k}; ++i)
    for (std::size_t j = 0; j <= pk.m; ++j) out += line(indexed("y", i, j), pk.at(i, j).to_string());
  return out;
}

PublicKey parse_public_key(std::string_view text) {
  Reader in(text);
  PublicKey pk;
  pk.group = read_params(in);
  pk.k = read_small(in, "k");
  pk.m = read_small(in, "m");
  if (pk.k < 1) throw ParseError("k must be at least 1");
  for (std::size_t i = 0; i < 2 * std::size_t{pk.k}; ++i) {
    for (std::size_t j = 0; j <= pk.m; ++j) {
      const std::string key = indexed("y", i, j);
      pk.elements.push_back(parse_element(in.expect(key), key, pk.group));
    }
  }
  in.finish();
  return pk;
}

std::string emit_secret(const TracingSecret& secret) {
  std::string out = emit_params(secret.params()) + line("k", secret.k()) + line("m", secret.m());
  for (std::size_t i = 0; i < secret.rows(); ++i)
    for (std::size_t j = 0; j < secret.cols(); ++j) out += line(indexed("a", i, j), secret.at(i, j).to_string());
  return out;
}

TracingSecret parse_secret(std::string_view text) {
  Reader in(text);
  const GroupParams group = read_params(in);
  const unsigned k = read_small(in, "k");
  const unsigned m = read_small(in, "m");
  if (k < 1) throw ParseError("k must be at least 1");
  std::vector<Scalar> coeffs;
  for (std::size_t i = 0; i < 2 * std::size_t{k}; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      const std::string key = indexed("a", i, j);
      coeffs.push_back(parse_scalar(in.expect(key), key, group));
    }
  }
  in.finish();
  return TracingSecret(k, m, std::move(coeffs), group);
}

std::string emit_user_key(const UserKey& key) {
  return line("u", key.u.to_string()) + line("t", key.t) + line("sk", key.value.to_string());
}

UserKey parse_user_key(std::string_view text, const GroupParams& group) {
  Reader in(text);
  UserKey key;
  key.u = parse_scalar(in.expect("u"), "u", group);
  key.t = parse_u64(in.expect("t"), "t");
  key.value = parse_scalar(in.expect("sk"), "sk", group);
  in.finish();
  return key;
}

std::string emit_master_key(const MasterKey& mk) {
  std::string out = line("u", mk.u.to_string());
  for (std::size_t j = 0; j < mk.z_star.size(); ++j) out += line(indexed("z", j + 1), mk.z_star[j].to_string());
  return out;
}

namespace {

std::vector<Scalar> read_z_star(Reader& in, const GroupParams& group) {
  std::vector<Scalar> z;
  while (!in.done() && in.peek_key().starts_with("z[")) {
    const std::string key = indexed("z", z.size() + 1);
    z.push_back(parse_scalar(in.expect(key), key, group));
  }
  return z;
}

}  // namespace

MasterKey parse_master_key(std::string_view text, const GroupParams& group) {
  Reader in(text);
  MasterKey mk;
  mk.u = parse_scalar(in.expect("u"), "u", group);
  mk.z_star = read_z_star(in, group);
  in.finish();
  return mk;
}

std::string emit_ciphertext(const Ciphertext& c) {
  std::string out = line("t", c.t) + line("y", c.y.to_string());
  for (std::size_t i = 0; i < c.z.size(); ++i) out += line(indexed("z", i), c.z[i].to_string());
  return out;
}

Ciphertext parse_ciphertext(std::string_view text, const GroupParams& group) {
  Reader in(text);
  Ciphertext c;
  c.t = parse_u64(in.expect("t"), "t");
  c.y = parse_element(in.expect("y"), "y", group);
  while (!in.done()) {
    const std::string key = indexed("z", c.z.size());
    c.z.push_back(parse_element(in.expect(key), key, group));
  }
  if (c.z.empty() || c.z.size() % 2 != 0) throw ParseError("header must carry 2k z components");
  return c;
}

std::string emit_pirate_decoder(const PirateDecoder& pd) {
  if (const auto* keys = std::get_if<PerPeriodKeys>(&pd)) {
    std::string out;
    for (const auto& e : keys->entries) out += line("entry", emit_triple(e));
    return out;
  }
  const auto& form = std::get<MasterForm>(pd);
  std::string out = line("master", form.master.u.to_string());
  for (std::size_t j = 0; j < form.master.z_star.size(); ++j) {
    out += line(indexed("z", j + 1), form.master.z_star[j].to_string());
  }
  return out + line("ik", form.initial.value.to_string());
}

PirateDecoder parse_pirate_decoder(std::string_view text, const GroupParams& group) {
  Reader in(text);
  if (in.peek_key() == "master") {
    MasterForm form;
    form.master.u = parse_scalar(in.expect("master"), "master", group);
    form.master.z_star = read_z_star(in, group);
    form.initial = InitialKey{form.master.u, parse_scalar(in.expect("ik"), "ik", group)};
    in.finish();
    return form;
  }
  PerPeriodKeys keys{read_entries(in, group)};
  if (keys.entries.empty()) throw ParseError("pirate decoder file holds no entries");
  return keys;
}

std::string emit_trace_report(const TraceReport& report) {
  if (!report.traitor || !report.evidence) {
    return line("traitor", "none") + line("evidence_u", "") + line("evidence_t", "") + line("evidence_d", "") +
           line("checked", report.checked);
  }
  return line("traitor", report.traitor->to_string()) + line("evidence_u", report.evidence->u.to_string()) +
         line("evidence_t", report.evidence->t) + line("evidence_d", report.evidence->d.to_string()) +
         line("checked", report.checked);
}

TraceReport parse_trace_report(std::string_view text, const GroupParams& group) {
  Reader in(text);
  TraceReport report;
  const auto traitor = in.expect("traitor");
  const auto eu = in.expect("evidence_u");
  const auto et = in.expect("evidence_t");
  const auto ed = in.expect("evidence_d");
  report.checked = parse_u64(in.expect("checked"), "checked");
  in.finish();
  if (traitor == "none") {
    if (!eu.empty() || !et.empty() || !ed.empty()) throw ParseError("evidence present without a traitor");
    return report;
  }
  report.traitor = parse_scalar(traitor, "traitor", group);
  report.evidence = KeyTriple{parse_scalar(eu, "evidence_u", group), parse_u64(et, "evidence_t"),
                              parse_scalar(ed, "evidence_d", group)};
  if (!(report.evidence->u == *report.traitor)) throw ParseError("evidence names a different user");
  return report;
}

std::string emit_exposure_set(const ExposureSet& ex) {
  std::string out;
  for (const auto& e : ex.entries) out += line("entry", emit_triple(e));
  return out;
}

ExposureSet parse_exposure_set(std::string_view text, const GroupParams& group) {
  Reader in(text);
  return ExposureSet{read_entries(in, group)};
}

std::string emit_game_summary(const GameSummary& summary) {
  const double rate = summary.games == 0 ? 0.0 : static_cast<double>(summary.wins) / static_cast<double>(summary.games);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", rate);
  return line("games", summary.games) + line("wins", summary.wins) + line("rate", buf);
}

GameSummary parse_game_summary(std::string_view text) {
  Reader in(text);
  GameSummary summary;
  summary.games = parse_u64(in.expect("games"), "games");
  summary.wins = parse_u64(in.expect("wins"), "wins");
  const std::string rate(in.expect("rate"));
  in.finish();
  if (summary.wins > summary.games) throw ParseError("more wins than games");
  if (emit_game_summary(summary) != std::string(text)) throw ParseError("rate does not match wins/games");
  return summary;
}

std::string emit_cost_table(const CostTable& table, std::string_view prefix) {
  const std::string p(prefix);
  return line(p + "header", table.header_elems) + line(p + "pk", table.pk_components) +
         line(p + "store", table.user_store) + line(p + "upd", table.upd_muls) + line(p + "enc", table.enc_exps) +
         line(p + "dec", table.dec_exps);
}

CostTable parse_cost_table(std::string_view text, std::string_view prefix) {
  Reader in(text);
  const std::string p(prefix);
  CostTable table;
  table.header_elems = parse_u64(in.expect(p + "header"), "header");
  table.pk_components = parse_u64(in.expect(p + "pk"), "pk");
  table.user_store = parse_u64(in.expect(p + "store"), "store");
  table.upd_muls = parse_u64(in.expect(p + "upd"), "upd");
  table.enc_exps = parse_u64(in.expect(p + "enc"), "enc");
  table.dec_exps = parse_u64(in.expect(p + "dec"), "dec");
  in.finish();
  return table;
}

}  // namespace ttake::io
