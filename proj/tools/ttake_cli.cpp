// Operator CLI over a keystore directory.
//
//   ttake params --bits 32 --seed 1
//   ttake setup -k 1 -N 3 -m 1 -T 4 --seed 2
//   ttake issue -u 2
//   ttake update -u 2 -t 1
//   ttake encrypt -t 1 --message 5 --seed 3
//   ttake decrypt --header keystore/header.txt --key keystore/users/2/key.txt
//   ttake trace --pd pd.txt
//   ttake expose --count 3 --forbid 2 --seed 4
//   ttake game --trials 1000 --seed 5
//   ttake bench -k 2 -m 3 --seed 6

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ttake/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = ttake::cli;
  CLI::App app{"Traitor tracing with key-insulated user keys"};
  app.require_subcommand(1);

  std::string keystore = cli::default_keystore().string();
  app.add_option("--dir", keystore, std::string("Keystore directory (default $") + cli::kKeystoreEnv + " or ./keystore)");

  std::optional<std::uint64_t> seed;
  auto with_seed = [&seed](CLI::App* sub) { sub->add_option("--seed", seed, "Deterministic random seed"); };

  unsigned bits = 64;
  auto* params = app.add_subcommand("params", "Generate safe-prime group parameters");
  params->add_option("--bits", bits, "Bit length of q")->capture_default_str();
  with_seed(params);

  unsigned k = 1, m = 0;
  std::uint64_t users = 1, periods = 1;
  auto* setup = app.add_subcommand("setup", "Generate the public key and tracing secret");
  setup->add_option("-k", k, "Coalition bound")->required();
  setup->add_option("-N", users, "Number of users")->required();
  setup->add_option("-m", m, "Exposures tolerated per user")->required();
  setup->add_option("-T", periods, "Number of periods")->required();
  with_seed(setup);

  std::uint64_t u = 0, t = 0;
  auto* issue = app.add_subcommand("issue", "Write a user's master key and initial key");
  issue->add_option("-u", u, "User ID")->required();

  auto* update = app.add_subcommand("update", "Advance a user's key to period t");
  update->add_option("-u", u, "User ID")->required();
  update->add_option("-t", t, "Target period")->required();

  std::string message;
  std::optional<std::string> out_file;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt an integer message for period t");
  encrypt->add_option("-t", t, "Period")->required();
  encrypt->add_option("--message", message, "Integer in [1, q]")->required();
  encrypt->add_option("--out", out_file, "Header output file");
  with_seed(encrypt);

  std::string header_file, key_file;
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a header with a user key");
  decrypt->add_option("--header", header_file, "Header file")->required();
  decrypt->add_option("--key", key_file, "User key file")->required();

  std::string pd_file;
  auto* trace = app.add_subcommand("trace", "Trace a confiscated pirate decoder");
  trace->add_option("--pd", pd_file, "Pirate decoder file")->required();

  std::size_t count = 0;
  std::optional<std::uint64_t> forbid;
  auto* expose = app.add_subcommand("expose", "Sample an admissible exposure set");
  expose->add_option("--count", count, "Number of exposed keys")->required();
  expose->add_option("--forbid", forbid, "Period to keep unexposed");
  with_seed(expose);

  std::uint64_t trials = 1000;
  auto* game = app.add_subcommand("game", "Run left-or-right games with a guessing adversary");
  game->add_option("--trials", trials, "Number of games")->capture_default_str();
  with_seed(game);

  auto* bench = app.add_subcommand("bench", "Closed-form and measured cost table");
  bench->add_option("-k", k, "Coalition bound")->required();
  bench->add_option("-m", m, "Exposures tolerated per user")->required();
  with_seed(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kParameterError;
  }

  const cli::Context ctx{keystore, std::cout, std::cerr};
  if (*params) return cli::cmd_params(ctx, bits, seed);
  if (*setup) return cli::cmd_setup(ctx, k, users, m, periods, seed);
  if (*issue) return cli::cmd_issue(ctx, u);
  if (*update) return cli::cmd_update(ctx, u, t);
  if (*encrypt) {
    std::optional<std::filesystem::path> out;
    if (out_file) out = *out_file;
    return cli::cmd_encrypt(ctx, t, message, out, seed);
  }
  if (*decrypt) return cli::cmd_decrypt(ctx, header_file, key_file);
  if (*trace) return cli::cmd_trace(ctx, pd_file);
  if (*expose) return cli::cmd_expose(ctx, count, forbid, seed);
  if (*game) return cli::cmd_game(ctx, trials, seed);
  if (*bench) return cli::cmd_bench(ctx, k, m, seed);
  return cli::kFailure;
}
