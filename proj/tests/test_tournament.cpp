#include <doctest.h>

#include <set>

#include "oddcycle/errors.hpp"
#include "oddcycle/tournament.hpp"

using namespace oddcycle;

namespace {

TournamentConfig small_config() {
  TournamentConfig tc;
  tc.base = {12, 2, Variant::MakerBreaker, Rules::Connected, 77};
  tc.pairings = {{"random-maker", "breaker-connected"},
                 {"greedy-maker", "greedy-breaker"},
                 {"maker-oc-adapted", "random-breaker"}};
  tc.games = 12;
  tc.metrics = true;
  tc.keep_transcripts = true;
  return tc;
}

}  // namespace

TEST_SUITE("tournament") {
  TEST_CASE("parallel report equals the serial reference") {
    const TournamentConfig tc = small_config();
    const TournamentReport a = run_tournament(tc);
    const TournamentReport b = run_tournament_serial(tc);
    CHECK(report_csv(a) == report_csv(b));
    CHECK(report_json(a) == report_json(b));
    REQUIRE(a.transcripts.size() == b.transcripts.size());
    for (std::size_t i = 0; i < a.transcripts.size(); ++i)
      CHECK(dump_transcript(a.transcripts[i]) == dump_transcript(b.transcripts[i]));
  }

  TEST_CASE("report contents") {
    const TournamentConfig tc = small_config();
    const TournamentReport r = run_tournament(tc);
    REQUIRE(r.pairings.size() == 3);
    CHECK(r.transcripts.size() == 36);
    for (const PairingReport& p : r.pairings) {
      CHECK(p.games == 12);
      CHECK(p.builder_wins + p.blocker_wins == 12);
      int reasons = 0;
      for (const auto& [_, count] : p.end_reasons) reasons += count;
      CHECK(reasons == 12);
      CHECK(p.mean_rounds() > 0);
      CHECK_FALSE(p.metrics.empty());
    }
    const std::string csv = report_csv(r);
    CHECK(csv.rfind("pairing,games,builder_wins,blocker_wins,mean_rounds,violations\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.find("random-maker vs breaker-connected,12,") != std::string::npos);
    CHECK(r.total_violations() == 0);
  }

  TEST_CASE("game seeds") {
    std::set<std::uint64_t> seen;
    for (int p = 0; p < 4; ++p)
      for (int i = 0; i < 100; ++i) seen.insert(game_seed(5, p, i));
    CHECK(seen.size() == 400);
    CHECK(game_seed(5, 1, 2) == game_seed(5, 1, 2));
    CHECK(game_seed(5, 1, 2) != game_seed(6, 1, 2));
  }

  TEST_CASE("games replay from their transcripts") {
    TournamentConfig tc = small_config();
    tc.base.variant = Variant::ClientWaiter;
    tc.pairings = {{"client-connected", "random-waiter"}, {"random-client", "greedy-waiter"}};
    const TournamentReport r = run_tournament(tc);
    for (const Transcript& t : r.transcripts) CHECK(replay(t).digest() == t.digest);
  }

  TEST_CASE("play_game attaches hooks by name") {
    TournamentConfig options;
    options.metrics = true;
    const GameConfig c{10, 2, Variant::MakerBreaker, Rules::Free, 3};
    const GameRun run = play_game(c, {"maker-oc", "greedy-breaker"}, options);
    CHECK(run.violations.empty());
    CHECK(run.metrics.size() == static_cast<std::size_t>(run.transcript.final_round()));
    CHECK_THROWS_AS(play_game(c, {"maker-oc", "nobody"}, options), ArgumentError);
    CHECK_THROWS_AS(play_game(c, {"breaker-connected", "maker-oc"}, options), ArgumentError);
  }

  TEST_CASE("assert mode stops at the first violation") {
    // Flags every game whose seed is odd.
    struct OddSeed : Hook {
      explicit OddSeed(ViolationLog& log) : log(log) {}
      void on_end(const GameState& st, const Transcript&) override {
        if (st.config().seed % 2) log.report("odd-seed", "seed is odd", st);
      }
      ViolationLog& log;
    };
    TournamentConfig tc = small_config();
    tc.extra_hook = [](ViolationLog& log) { return std::make_unique<OddSeed>(log); };
    const TournamentReport soft = run_tournament(tc);
    long long odd = 0;
    for (int p = 0; p < 3; ++p)
      for (int i = 0; i < tc.games; ++i) odd += game_seed(tc.base.seed, p, i) % 2;
    REQUIRE(odd > 0);
    CHECK(soft.total_violations() == odd);
    CHECK(soft.violations.front().hook == "odd-seed");

    tc.assert_mode = true;
    std::string parallel, serial;
    try {
      run_tournament(tc);
    } catch (const InvariantViolation& e) {
      parallel = e.what();
    }
    try {
      run_tournament_serial(tc);
    } catch (const InvariantViolation& e) {
      serial = e.what();
    }
    CHECK_FALSE(parallel.empty());
    CHECK(parallel == serial);
  }
}
