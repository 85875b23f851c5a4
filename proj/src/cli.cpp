#include "ttake/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "ttake/errors.hpp"
#include "ttake/games.hpp"
#include "ttake/io.hpp"
#include "ttake/scheme.hpp"
#include "ttake/tracing.hpp"

namespace ttake::cli {

namespace fs = std::filesystem;

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  if (!out) throw IoError("short write to " + path.string());
}

RandomSource make_rng(std::optional<std::uint64_t> seed) {
  return seed ? RandomSource(*seed) : RandomSource::from_entropy();
}

int guarded(const Context& ctx, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    ctx.err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const StructuralError& e) {
    ctx.err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ParameterError& e) {
    ctx.err << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const PeriodError& e) {
    ctx.err << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const DomainError& e) {
    ctx.err << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const CapacityError& e) {
    ctx.err << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const SequencingError& e) {
    ctx.err << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const std::exception& e) {
    ctx.err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

struct Loaded {
  GroupParams group;
  SystemParams sys;
};

GroupParams load_params(const Context& ctx) { return io::parse_params(read_file(ctx.keystore / kParamsFile)); }

Loaded load_system(const Context& ctx) {
  GroupParams group = load_params(ctx);
  SystemParams sys = io::parse_system(read_file(ctx.keystore / kSystemFile), group);
  return {std::move(group), sys};
}

TracingSecret load_secret(const Context& ctx, const GroupParams& group) {
  TracingSecret secret = io::parse_secret(read_file(ctx.keystore / kSecretFile));
  if (!(secret.params() == group)) throw ParseError("secret was generated for a different group");
  return secret;
}

void check_user(const SystemParams& sys, std::uint64_t u) {
  if (u < 1 || u > sys.users) {
    throw ParameterError("user " + std::to_string(u) + " outside [1, " + std::to_string(sys.users) + "]");
  }
}

void check_period(const SystemParams& sys, std::uint64_t t) {
  if (t < 1 || t > sys.periods) {
    throw PeriodError("period " + std::to_string(t) + " outside [1, " + std::to_string(sys.periods) + "]");
  }
}

void emit(const Context& ctx, const fs::path& path, const std::string& contents) {
  write_file(path, contents);
  ctx.out << contents;
}

}  // namespace

fs::path default_keystore() {
  if (const char* env = std::getenv(kKeystoreEnv); env && *env) return fs::path(env);
  return fs::path("keystore");
}

fs::path user_dir(const fs::path& keystore, std::uint64_t u) {
  return keystore / "users" / std::to_string(u);
}

int cmd_params(const Context& ctx, unsigned q_bits, std::optional<std::uint64_t> seed) {
  return guarded(ctx, [&] {
    RandomSource rng = make_rng(seed);
    emit(ctx, ctx.keystore / kParamsFile, io::emit_params(gen_params(q_bits, rng)));
    return kOk;
  });
}

int cmd_setup(const Context& ctx, unsigned k, std::uint64_t users, unsigned m, std::uint64_t periods,
              std::optional<std::uint64_t> seed) {
  return guarded(ctx, [&] {
    const GroupParams group = load_params(ctx);
    const SystemParams sys = SystemParams::make(k, users, m, periods, group);
    RandomSource rng = make_rng(seed);
    const Setup setup = gen(sys, group, rng);
    write_file(ctx.keystore / kSystemFile, io::emit_system(sys));
    write_file(ctx.keystore / kSecretFile, io::emit_secret(setup.secret));
    emit(ctx, ctx.keystore / kPublicKeyFile, io::emit_public_key(setup.pk));
    return kOk;
  });
}

int cmd_issue(const Context& ctx, std::uint64_t u) {
  return guarded(ctx, [&] {
    const auto [group, sys] = load_system(ctx);
    check_user(sys, u);
    const TracingSecret secret = load_secret(ctx, group);
    const Scalar id = Zq(group).from_u64(u);
    const fs::path dir = user_dir(ctx.keystore, u);
    const InitialKey ik = issue_initial_key(secret, id);
    write_file(dir / "master.txt", io::emit_master_key(issue_master_key(secret, id)));
    write_file(dir / "initial.txt", io::emit_user_key(as_user_key(ik)));
    emit(ctx, dir / "key.txt", io::emit_user_key(as_user_key(ik)));
    return kOk;
  });
}

int cmd_update(const Context& ctx, std::uint64_t u, std::uint64_t t) {
  return guarded(ctx, [&] {
    const auto [group, sys] = load_system(ctx);
    check_user(sys, u);
    check_period(sys, t);
    const fs::path dir = user_dir(ctx.keystore, u);
    const MasterKey mk = io::parse_master_key(read_file(dir / "master.txt"), group);
    const UserKey prev = io::parse_user_key(read_file(dir / "key.txt"), group);
    if (mk.z_star.size() != sys.m) throw ParseError("master key does not have m components");
    const UserKey next = upd(upd_star(mk, t, sys.periods, group), prev, group);
    emit(ctx, dir / "key.txt", io::emit_user_key(next));
    return kOk;
  });
}

int cmd_encrypt(const Context& ctx, std::uint64_t t, const std::string& message,
                const std::optional<fs::path>& out_file, std::optional<std::uint64_t> seed) {
  return guarded(ctx, [&] {
    const auto [group, sys] = load_system(ctx);
    check_period(sys, t);
    const PublicKey pk = io::parse_public_key(read_file(ctx.keystore / kPublicKeyFile));
    if (!(pk.group == group) || pk.k != sys.k || pk.m != sys.m) {
      throw ParseError("public key does not match the system parameters");
    }
    mpz_class x;
    if (message.empty() || message.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("message must be a decimal integer in [1, q]");
    }
    x.set_str(message, 10);
    RandomSource rng = make_rng(seed);
    const Ciphertext c = enc(pk, t, encode_message(x, group), rng);
    emit(ctx, out_file.value_or(ctx.keystore / kHeaderFile), io::emit_ciphertext(c));
    return kOk;
  });
}

int cmd_decrypt(const Context& ctx, const fs::path& header_file, const fs::path& key_file) {
  return guarded(ctx, [&] {
    const GroupParams group = load_params(ctx);
    const Ciphertext c = io::parse_ciphertext(read_file(header_file), group);
    const UserKey key = io::parse_user_key(read_file(key_file), group);
    const auto m = dec(c, key, group);
    if (!m) {
      ctx.err << "decryption failed: key period " << key.t << " does not match header period " << c.t << "\n";
      return static_cast<int>(kMiss);
    }
    ctx.out << decode_message(*m, group).get_str() << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_trace(const Context& ctx, const fs::path& pd_file) {
  return guarded(ctx, [&] {
    const auto [group, sys] = load_system(ctx);
    const TracingSecret secret = load_secret(ctx, group);
    const PublicKey pk = io::parse_public_key(read_file(ctx.keystore / kPublicKeyFile));
    const PirateDecoder pd = io::parse_pirate_decoder(read_file(pd_file), group);
    std::vector<Scalar> registry;
    Zq zq(group);
    for (std::uint64_t u = 1; u <= sys.users; ++u) registry.push_back(zq.from_u64(u));
    const TraceReport report = trace(pk, secret, pd, registry, sys.periods);
    emit(ctx, ctx.keystore / kTraceReportFile, io::emit_trace_report(report));
    if (!report.traitor) {
      ctx.err << "no traitor identified\n";
      return static_cast<int>(kMiss);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_expose(const Context& ctx, std::size_t count, std::optional<std::uint64_t> forbid_t,
               std::optional<std::uint64_t> seed) {
  return guarded(ctx, [&] {
    const auto [group, sys] = load_system(ctx);
    if (forbid_t) check_period(sys, *forbid_t);
    const TracingSecret secret = load_secret(ctx, group);
    RandomSource rng = make_rng(seed);
    const ExposureSet ex = sample_exposure(sys, secret, forbid_t, rng, count);
    emit(ctx, ctx.keystore / kExposureFile, io::emit_exposure_set(ex));
    return kOk;
  });
}

int cmd_game(const Context& ctx, std::uint64_t trials, std::optional<std::uint64_t> seed) {
  return guarded(ctx, [&] {
    const auto [group, sys] = load_system(ctx);
    if (trials == 0) throw ParameterError("trials must be positive");
    if (sys.periods < 2) throw ParameterError("the game needs T >= 2 so a challenge period stays open");
    RandomSource rng = make_rng(seed);
    GuessingAdversary adversary(sys.periods, RandomSource(rng.next_u64()));
    io::GameSummary summary;
    for (std::uint64_t n = 0; n < trials; ++n) {
      ++summary.games;
      if (lr_game(sys, group, adversary, rng).won) ++summary.wins;
    }
    emit(ctx, ctx.keystore / kGameFile, io::emit_game_summary(summary));
    return kOk;
  });
}

int cmd_bench(const Context& ctx, unsigned k, unsigned m, std::optional<std::uint64_t> seed) {
  return guarded(ctx, [&] {
    if (k < 1) throw ParameterError("k must be at least 1");
    RandomSource rng = make_rng(seed);
    const GroupParams group =
        fs::exists(ctx.keystore / kParamsFile) ? load_params(ctx) : gen_params(64, rng);
    const CostTable closed = cost_table(k, m);
    const CostTable measured = measured_costs(k, m, group, rng);
    ctx.out << "k=" << k << "\nm=" << m << "\n"
            << io::emit_cost_table(closed) << io::emit_cost_table(measured, "measured_");
    return kOk;
  });
}

}  // namespace ttake::cli
