#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace ttake::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParameterError = 2,
  kParseError = 3,
  kMiss = 4,
};

/// Environment variable naming the default keystore directory.
inline constexpr const char* kKeystoreEnv = "TTAKE_KEYSTORE";

/// $TTAKE_KEYSTORE, or ./keystore when unset.
std::filesystem::path default_keystore();

// Keystore layout, relative to the keystore root.
inline constexpr const char* kParamsFile = "params.txt";
inline constexpr const char* kSystemFile = "system.txt";
inline constexpr const char* kPublicKeyFile = "pk.txt";
inline constexpr const char* kSecretFile = "secret.txt";
inline constexpr const char* kExposureFile = "exposures.txt";
inline constexpr const char* kTraceReportFile = "trace_report.txt";
inline constexpr const char* kGameFile = "game.txt";
inline constexpr const char* kHeaderFile = "header.txt";

std::filesystem::path user_dir(const std::filesystem::path& keystore, std::uint64_t u);

struct Context {
  std::filesystem::path keystore;
  std::ostream& out;
  std::ostream& err;
};

// Every command returns an ExitCode and reports failures on ctx.err.
// Randomized commands draw from std::random_device when no seed is given.

int cmd_params(const Context& ctx, unsigned q_bits, std::optional<std::uint64_t> seed);
int cmd_setup(const Context& ctx, unsigned k, std::uint64_t users, unsigned m, std::uint64_t periods,
              std::optional<std::uint64_t> seed);
int cmd_issue(const Context& ctx, std::uint64_t u);
int cmd_update(const Context& ctx, std::uint64_t u, std::uint64_t t);
/// `message` is a decimal integer in [1, q]. Writes the header to `out_file`
/// (default <keystore>/header.txt).
int cmd_encrypt(const Context& ctx, std::uint64_t t, const std::string& message,
                const std::optional<std::filesystem::path>& out_file, std::optional<std::uint64_t> seed);
int cmd_decrypt(const Context& ctx, const std::filesystem::path& header_file,
                const std::filesystem::path& key_file);
int cmd_trace(const Context& ctx, const std::filesystem::path& pd_file);
int cmd_expose(const Context& ctx, std::size_t count, std::optional<std::uint64_t> forbid_t,
               std::optional<std::uint64_t> seed);
int cmd_game(const Context& ctx, std::uint64_t trials, std::optional<std::uint64_t> seed);
/// Uses the keystore's group when present, otherwise a fresh 64-bit group.
int cmd_bench(const Context& ctx, unsigned k, unsigned m, std::optional<std::uint64_t> seed);

}  // namespace ttake::cli
