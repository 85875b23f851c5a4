#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "ttake/errors.hpp"
#include "ttake/io.hpp"

using namespace ttake;

TEST_CASE("toy files have the expected text") {
  const GroupParams gp = oracle::toy_group();
  Zq zq(gp);
  CHECK(io::emit_params(gp) == "p=23\nq=11\ng=2\n");
  const auto sys = SystemParams::make(1, 3, 1, 4, gp);
  CHECK(io::emit_system(sys) == "s=4\nk=1\nN=3\nm=1\nT=4\nk_T=1\nm_T=3\n");
  const PublicKey pk = derive_public_key(oracle::toy_poly());
  CHECK(io::emit_public_key(pk) ==
        "p=23\nq=11\ng=2\nk=1\nm=1\ny[0][0]=8\ny[0][1]=9\ny[1][0]=13\ny[1][1]=4\n");
  CHECK(io::emit_user_key({zq.from_u64(2), 1, zq.from_u64(4)}) == "u=2\nt=1\nsk=4\n");
  CHECK(io::emit_master_key({zq.from_u64(2), {zq.from_u64(9)}}) == "u=2\nz[1]=9\n");
  const Ciphertext c = enc_with_exponent(pk, 1, GroupElement::trusted(4), zq.from_u64(3));
  CHECK(io::emit_ciphertext(c) == "t=1\ny=8\nz[0]=16\nz[1]=9\n");
  CHECK(io::emit_game_summary({3, 1}) == "games=3\nwins=1\nrate=0.333333\n");
  CHECK(io::emit_trace_report({}) == "traitor=none\nevidence_u=\nevidence_t=\nevidence_d=\nchecked=0\n");
  CHECK(io::emit_cost_table(cost_table(2, 3), "x_") == "x_header=5\nx_pk=19\nx_store=4\nx_upd=9\nx_enc=17\nx_dec=4\n");
}

TEST_CASE("round trips on random objects") {
  RandomSource rng(60);
  const GroupParams gp = gen_params(64, rng);
  Zq zq(gp);
  CHECK(io::parse_params(io::emit_params(gp)) == gp);
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned m = 0; m <= 3; ++m) {
      const auto sys = SystemParams::make(k, 6, m, 9, gp);
      CHECK(io::parse_system(io::emit_system(sys), gp) == sys);
      const Setup setup = gen(sys, gp, rng);
      CHECK(io::parse_public_key(io::emit_public_key(setup.pk)) == setup.pk);
      CHECK(io::parse_secret(io::emit_secret(setup.secret)) == setup.secret);
      for (const auto& mk : setup.master_keys) CHECK(io::parse_master_key(io::emit_master_key(mk), gp) == mk);
      const UserKey key = derive_key_direct(setup.secret, zq.from_u64(4), 7);
      CHECK(io::parse_user_key(io::emit_user_key(key), gp) == key);
      const Ciphertext c = enc(setup.pk, 7, encode_message(42, gp), rng);
      CHECK(io::parse_ciphertext(io::emit_ciphertext(c), gp) == c);

      const std::size_t count = std::min<std::size_t>(sys.total_exposures, admissible_exposure_capacity(sys));
      const ExposureSet ex = sample_exposure(sys, setup.secret, 1, rng, count);
      CHECK(io::parse_exposure_set(io::emit_exposure_set(ex), gp) == ex);
      const PirateDecoder per_period = PerPeriodKeys{{KeyTriple{key.u, key.t, key.value}}};
      CHECK(io::parse_pirate_decoder(io::emit_pirate_decoder(per_period), gp) == per_period);
      const PirateDecoder master = MasterForm{setup.master_keys[1], setup.initial_keys[1]};
      CHECK(io::parse_pirate_decoder(io::emit_pirate_decoder(master), gp) == master);

      const TraceReport hit{key.u, KeyTriple{key.u, key.t, key.value}, 3};
      CHECK(io::parse_trace_report(io::emit_trace_report(hit), gp) == hit);
      const TraceReport miss{std::nullopt, std::nullopt, 5};
      CHECK(io::parse_trace_report(io::emit_trace_report(miss), gp) == miss);
      const CostTable table = cost_table(k, m);
      CHECK(io::parse_cost_table(io::emit_cost_table(table, "measured_"), "measured_") == table);
    }
  }
  for (std::uint64_t games : {1ULL, 7ULL, 1000ULL}) {
    const io::GameSummary s{games, rng.below_u64(games + 1)};
    CHECK(io::parse_game_summary(io::emit_game_summary(s)) == s);
  }
}

TEST_CASE("parsers reject malformed input") {
  const GroupParams gp = oracle::toy_group();
  CHECK_THROWS_AS(io::parse_params("p=23\nq=11\ng=2"), ParseError);
  CHECK_THROWS_AS(io::parse_params("p=23\r\nq=11\ng=2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_params("p=23\nq=011\ng=2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_params("q=11\np=23\ng=2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_params("p=23\nq=11\ng=2\nx=1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_params("p=23\nq=11\ng=5\n"), ParseError);
  CHECK_THROWS_AS(io::parse_params("p=23\nq=11\n"), ParseError);
  CHECK_THROWS_AS(io::parse_params("p=23\nq=-11\ng=2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_params("p 23\n"), ParseError);

  CHECK_THROWS_AS(io::parse_system("s=4\nk=1\nN=3\nm=1\nT=4\nk_T=1\nm_T=4\n", gp), ParseError);
  CHECK_THROWS_AS(io::parse_system("s=5\nk=1\nN=3\nm=1\nT=4\nk_T=1\nm_T=3\n", gp), ParseError);
  CHECK_THROWS_AS(io::parse_system("s=4\nk=1\nN=11\nm=1\nT=4\nk_T=1\nm_T=3\n", gp), ParseError);

  CHECK_THROWS_AS(io::parse_user_key("u=2\nt=1\nsk=11\n", gp), ParseError);
  CHECK_THROWS_AS(io::parse_user_key("u=2\nt=1\n", gp), ParseError);
  CHECK_THROWS_AS(io::parse_master_key("u=2\nz[2]=9\n", gp), ParseError);

  CHECK_THROWS_AS(io::parse_ciphertext("t=1\ny=5\nz[0]=16\nz[1]=9\n", gp), ParseError);
  CHECK_THROWS_AS(io::parse_ciphertext("t=1\ny=8\nz[0]=16\n", gp), ParseError);
  CHECK_THROWS_AS(io::parse_ciphertext("t=1\ny=8\n", gp), ParseError);
  CHECK_THROWS_AS(io::parse_ciphertext("t=1\ny=8\nz[1]=16\nz[0]=9\n", gp), ParseError);

  CHECK_THROWS_AS(io::parse_public_key("p=23\nq=11\ng=2\nk=1\nm=0\ny[0][0]=8\n"), ParseError);
  CHECK_THROWS_AS(io::parse_public_key("p=23\nq=11\ng=2\nk=0\nm=0\n"), ParseError);

  CHECK_THROWS_AS(io::parse_pirate_decoder("", gp), ParseError);
  CHECK_THROWS_AS(io::parse_pirate_decoder("entry=2,1\n", gp), ParseError);
  CHECK_THROWS_AS(io::parse_pirate_decoder("entry=2,1,4,5\n", gp), ParseError);
  CHECK_THROWS_AS(io::parse_pirate_decoder("master=2\nz[1]=9\n", gp), ParseError);
  CHECK_NOTHROW(io::parse_pirate_decoder("master=2\nz[1]=9\nik=6\n", gp));

  CHECK_THROWS_AS(io::parse_trace_report("traitor=none\nevidence_u=2\nevidence_t=\nevidence_d=\nchecked=1\n", gp),
                  ParseError);
  CHECK_THROWS_AS(io::parse_trace_report("traitor=2\nevidence_u=3\nevidence_t=1\nevidence_d=4\nchecked=1\n", gp),
                  ParseError);

  CHECK_THROWS_AS(io::parse_game_summary("games=3\nwins=1\nrate=0.5\n"), ParseError);
  CHECK_THROWS_AS(io::parse_game_summary("games=3\nwins=4\nrate=1.333333\n"), ParseError);
  CHECK_THROWS_AS(io::parse_cost_table("header=5\n", ""), ParseError);
}
