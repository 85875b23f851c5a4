#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ttake/cli.hpp"
#include "ttake/io.hpp"

using namespace ttake;
namespace fs = std::filesystem;

namespace {

struct Sandbox {
  fs::path root;
  std::ostringstream out, err;
  cli::Context ctx;

  explicit Sandbox(const std::string& name)
      : root(fs::temp_directory_path() / ("ttake_cli_" + name)), ctx{root, out, err} {
    fs::remove_all(root);
    fs::create_directories(root);
  }
  ~Sandbox() { fs::remove_all(root); }

  std::string take_out() {
    std::string s = out.str();
    out.str("");
    return s;
  }
  std::string file(const fs::path& rel) const {
    std::ifstream in(root / rel);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
};

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST_CASE("toy workflow: params, setup, issue, update, encrypt, decrypt") {
  Sandbox sb("workflow");
  REQUIRE(cli::cmd_params(sb.ctx, 4, 1) == cli::kOk);
  CHECK(sb.take_out().rfind("p=23\nq=11\ng=", 0) == 0);

  REQUIRE(cli::cmd_setup(sb.ctx, 1, 3, 1, 4, 2) == cli::kOk);
  const std::string pk = sb.take_out();
  CHECK(count_prefix(pk, "y[") == 4);
  CHECK(sb.file("system.txt") == "s=4\nk=1\nN=3\nm=1\nT=4\nk_T=1\nm_T=3\n");

  REQUIRE(cli::cmd_issue(sb.ctx, 2) == cli::kOk);
  CHECK(sb.take_out().rfind("u=2\nt=0\n", 0) == 0);
  REQUIRE(cli::cmd_update(sb.ctx, 2, 1) == cli::kOk);
  CHECK(sb.take_out().rfind("u=2\nt=1\n", 0) == 0);

  for (unsigned x = 1; x <= 11; ++x) {
    REQUIRE(cli::cmd_encrypt(sb.ctx, 1, std::to_string(x), std::nullopt, x) == cli::kOk);
    CHECK(count_prefix(sb.take_out(), "z[") == 2);
    REQUIRE(cli::cmd_decrypt(sb.ctx, sb.root / "header.txt", sb.root / "users/2/key.txt") == cli::kOk);
    CHECK(sb.take_out() == std::to_string(x) + "\n");
  }

  // Stale key for the next period.
  REQUIRE(cli::cmd_encrypt(sb.ctx, 2, "5", sb.root / "h2.txt", 9) == cli::kOk);
  sb.take_out();
  CHECK(cli::cmd_decrypt(sb.ctx, sb.root / "h2.txt", sb.root / "users/2/key.txt") == cli::kMiss);
  REQUIRE(cli::cmd_update(sb.ctx, 2, 2) == cli::kOk);
  sb.take_out();
  REQUIRE(cli::cmd_decrypt(sb.ctx, sb.root / "h2.txt", sb.root / "users/2/key.txt") == cli::kOk);
  CHECK(sb.take_out() == "5\n");
}

TEST_CASE("trace, expose and game through the keystore") {
  Sandbox sb("trace");
  REQUIRE(cli::cmd_params(sb.ctx, 32, 3) == cli::kOk);
  REQUIRE(cli::cmd_setup(sb.ctx, 2, 8, 1, 6, 4) == cli::kOk);
  REQUIRE(cli::cmd_issue(sb.ctx, 3) == cli::kOk);
  REQUIRE(cli::cmd_update(sb.ctx, 3, 1) == cli::kOk);
  const GroupParams gp = io::parse_params(sb.file("params.txt"));
  const UserKey key = io::parse_user_key(sb.file("users/3/key.txt"), gp);
  sb.take_out();

  {
    std::ofstream pd(sb.root / "pd.txt");
    pd << "entry=1,1,5\nentry=" << key.u.to_string() << "," << key.t << "," << key.value.to_string() << "\n";
  }
  CHECK(cli::cmd_trace(sb.ctx, sb.root / "pd.txt") == cli::kOk);
  const TraceReport report = io::parse_trace_report(sb.take_out(), gp);
  CHECK(report.traitor->to_string() == "3");
  CHECK(report.checked == 2);

  {
    const MasterKey mk = io::parse_master_key(sb.file("users/3/master.txt"), gp);
    const UserKey ik = io::parse_user_key(sb.file("users/3/initial.txt"), gp);
    std::ofstream pd(sb.root / "pd_master.txt");
    pd << io::emit_pirate_decoder(MasterForm{mk, InitialKey{ik.u, ik.value}});
  }
  CHECK(cli::cmd_trace(sb.ctx, sb.root / "pd_master.txt") == cli::kOk);
  sb.take_out();

  {
    std::ofstream pd(sb.root / "pd_junk.txt");
    pd << "entry=1,1,5\n";
  }
  CHECK(cli::cmd_trace(sb.ctx, sb.root / "pd_junk.txt") == cli::kMiss);
  CHECK(sb.take_out().rfind("traitor=none\n", 0) == 0);

  REQUIRE(cli::cmd_expose(sb.ctx, 7, 2, 5) == cli::kOk);
  const std::string ex = sb.take_out();
  CHECK(count_prefix(ex, "entry=") == 7);
  CHECK(ex.find(",2,") == std::string::npos);
  CHECK(cli::cmd_expose(sb.ctx, 9, 2, 5) == cli::kParameterError);

  REQUIRE(cli::cmd_game(sb.ctx, 50, 6) == cli::kOk);
  const auto summary = io::parse_game_summary(sb.take_out());
  CHECK(summary.games == 50);
  CHECK(summary.wins <= 50);
}

TEST_CASE("bench prints the closed-form and measured tables") {
  Sandbox sb("bench");
  REQUIRE(cli::cmd_bench(sb.ctx, 2, 3, 1) == cli::kOk);
  CHECK(sb.take_out() ==
        "k=2\nm=3\nheader=5\npk=19\nstore=4\nupd=9\nenc=17\ndec=4\n"
        "measured_header=5\nmeasured_pk=19\nmeasured_store=4\nmeasured_upd=7\nmeasured_enc=17\nmeasured_dec=4\n");
  CHECK(cli::cmd_bench(sb.ctx, 0, 3, 1) == cli::kParameterError);
}

TEST_CASE("exit codes for bad parameters, parse errors and IO failures") {
  Sandbox sb("errors");
  CHECK(cli::cmd_setup(sb.ctx, 1, 3, 1, 4, 1) == cli::kFailure);  // no params yet
  CHECK(cli::cmd_params(sb.ctx, 3, 1) == cli::kParameterError);
  REQUIRE(cli::cmd_params(sb.ctx, 4, 1) == cli::kOk);
  CHECK(cli::cmd_setup(sb.ctx, 1, 11, 1, 4, 1) == cli::kParameterError);
  REQUIRE(cli::cmd_setup(sb.ctx, 1, 3, 1, 4, 1) == cli::kOk);
  CHECK(cli::cmd_issue(sb.ctx, 0) == cli::kParameterError);
  CHECK(cli::cmd_issue(sb.ctx, 4) == cli::kParameterError);
  REQUIRE(cli::cmd_issue(sb.ctx, 1) == cli::kOk);
  CHECK(cli::cmd_update(sb.ctx, 1, 5) == cli::kParameterError);
  CHECK(cli::cmd_update(sb.ctx, 1, 2) == cli::kParameterError);  // skips period 1
  CHECK(cli::cmd_encrypt(sb.ctx, 1, "12", std::nullopt, 1) == cli::kParameterError);
  CHECK(cli::cmd_encrypt(sb.ctx, 1, "0", std::nullopt, 1) == cli::kParameterError);
  CHECK(cli::cmd_encrypt(sb.ctx, 1, "abc", std::nullopt, 1) == cli::kParameterError);
  CHECK(cli::cmd_encrypt(sb.ctx, 5, "3", std::nullopt, 1) == cli::kParameterError);
  CHECK(cli::cmd_game(sb.ctx, 0, 1) == cli::kParameterError);

  {
    std::ofstream bad(sb.root / "bad_header.txt");
    bad << "t=1\ny=5\nz[0]=1\nz[1]=1\n";
  }
  CHECK(cli::cmd_decrypt(sb.ctx, sb.root / "bad_header.txt", sb.root / "users/1/key.txt") == cli::kParseError);
  CHECK(cli::cmd_decrypt(sb.ctx, sb.root / "missing.txt", sb.root / "users/1/key.txt") == cli::kFailure);
  {
    std::ofstream bad(sb.root / "pd.txt");
    bad << "entry=1,1\n";
  }
  CHECK(cli::cmd_trace(sb.ctx, sb.root / "pd.txt") == cli::kParseError);
  CHECK_FALSE(sb.err.str().empty());
}
