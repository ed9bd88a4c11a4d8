#include <doctest.h>

#include "helpers.hpp"
#include "oddcycle/errors.hpp"
#include "oddcycle/strategies.hpp"

using namespace oddcycle;
using testing::Lowest;
using testing::Scripted;

namespace {

GameConfig cfg(int n, int b, Variant v = Variant::MakerBreaker, Rules r = Rules::Free,
               std::uint64_t seed = 0) {
  return {n, b, v, r, seed};
}

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("maker-breaker turn accounting") {
    Lowest maker(Role::Builder), breaker(Role::Blocker);
    const GameConfig c = cfg(6, 2);
    Transcript t = run_maker_breaker(c, maker, breaker);
    REQUIRE(t.result);
    int expect_s = 0, k = 0;
    for (const Move& m : t.moves) {
      if (m.role == Role::Builder) {
        ++expect_s;
        k = 0;
        CHECK(m.k == 0);
      } else {
        ++k;
        CHECK(m.k == k);
        CHECK(k <= c.b);
      }
      CHECK(m.s == expect_s);
    }
    CHECK(t.final_round() == expect_s);
    CHECK_NOTHROW(replay(t));
  }

  TEST_CASE("bias at least the board size") {
    Lowest maker(Role::Builder), breaker(Role::Blocker);
    Transcript t = run_maker_breaker(cfg(4, 100), maker, breaker);
    REQUIRE(t.result);
    CHECK(t.result->winner == Winner::Blocker);
    CHECK(t.result->reason == EndReason::BoardExhausted);
    CHECK(t.moves.size() == 6);
    CHECK(t.moves.back().k == 5);
  }

  TEST_CASE("builder wins by closing a triangle") {
    // Maker 01, 02, then 12 closes the triangle.
    const GameConfig c = cfg(4, 1);
    Scripted maker({Action::claim(edge_index(0, 1, 4)), Action::claim(edge_index(0, 2, 4)),
                    Action::claim(edge_index(1, 2, 4))});
    Scripted breaker({Action::claim(edge_index(2, 3, 4)), Action::claim(edge_index(1, 3, 4))});
    Transcript t = run_maker_breaker(c, maker, breaker);
    REQUIRE(t.result);
    CHECK(t.result->winner == Winner::Builder);
    CHECK(t.result->reason == EndReason::OddCycleClosed);
  }

  TEST_CASE("forfeits end the game") {
    Scripted maker({});
    Lowest breaker(Role::Blocker);
    Transcript t = run_maker_breaker(cfg(5, 1), maker, breaker);
    CHECK(t.result->reason == EndReason::BuilderForfeit);
    CHECK(t.moves.size() == 1);
    CHECK(replay(t).end_reason() == EndReason::BuilderForfeit);
  }

  TEST_CASE("illegal claims are rule violations") {
    Scripted maker({Action::claim(0), Action::claim(0)});
    Scripted breaker({Action::claim(0)});
    try {
      run_maker_breaker(cfg(5, 1), maker, breaker);
      FAIL("expected a rule violation");
    } catch (const RuleViolation& v) {
      CHECK(v.rule() == "edge-already-claimed");
      CHECK(std::string(v.what()).find("s=1, k=1, breaker") != std::string::npos);
    }
    Scripted offerer({Action::make_offer({0})});
    Lowest breaker2(Role::Blocker);
    CHECK_THROWS_AS(run_maker_breaker(cfg(5, 1), offerer, breaker2), RuleViolation);
    Lowest m(Role::Builder), b(Role::Blocker);
    CHECK_THROWS_AS(run_maker_breaker(cfg(5, 1, Variant::ClientWaiter), m, b), ArgumentError);
  }

  TEST_CASE("connected maker-breaker ends without legal moves") {
    // Breaker claims every edge at 0 and 1 except 01, which Maker owns.
    const GameConfig c = cfg(4, 4, Variant::MakerBreaker, Rules::Connected);
    Scripted maker({Action::claim(edge_index(0, 1, 4))});
    Scripted breaker({Action::claim(edge_index(0, 2, 4)), Action::claim(edge_index(0, 3, 4)),
                      Action::claim(edge_index(1, 2, 4)), Action::claim(edge_index(1, 3, 4)),
                      Action::forfeit("unused")});
    Transcript t = run_maker_breaker(c, maker, breaker);
    CHECK(t.result->reason == EndReason::NoLegalBuilderMove);
    CHECK(t.result->winner == Winner::Blocker);
    CHECK_NOTHROW(replay(t));
  }

  TEST_CASE("offer validation clauses") {
    GameState st(cfg(5, 1, Variant::ClientWaiter, Rules::Connected));
    auto e = [](int u, int v) { return edge_index(u, v, 5); };
    CHECK(validate_offer(st, std::vector<EdgeId>{e(0, 1), e(0, 2)}).empty());
    CHECK(validate_offer(st, std::vector<EdgeId>{}) == std::vector<std::string>{"offer-size"});
    CHECK(validate_offer(st, std::vector<EdgeId>{e(0, 1), e(0, 2), e(0, 3)}) ==
          std::vector<std::string>{"offer-size"});
    CHECK(validate_offer(st, std::vector<EdgeId>{e(0, 1), e(0, 1)}) ==
          std::vector<std::string>{"offer-duplicate"});
    CHECK(validate_offer(st, std::vector<EdgeId>{e(0, 1), e(2, 3)}) ==
          std::vector<std::string>{"connected-first-round-common-vertex"});
    CHECK(validate_offer(st, std::vector<EdgeId>{99}) ==
          std::vector<std::string>{"offer-edge-out-of-range"});
    apply_round(st, std::vector<EdgeId>{e(0, 1), e(0, 2)}, e(0, 1));
    CHECK(st.owner(e(0, 2)) == Owner::Blocker);
    CHECK(validate_offer(st, std::vector<EdgeId>{e(0, 2)}) ==
          std::vector<std::string>{"offer-claimed"});
    CHECK(validate_offer(st, std::vector<EdgeId>{e(2, 3)}) ==
          std::vector<std::string>{"connected-not-adjacent"});
    CHECK(validate_offer(st, std::vector<EdgeId>{e(1, 3), e(3, 4)}) ==
          std::vector<std::string>{"connected-not-adjacent"});
    CHECK(offerable_edges(st).size() == 5);  // 03 04 12 13 14

    GameState free(cfg(5, 0, Variant::ClientWaiter, Rules::Free));
    CHECK(validate_offer(free, std::vector<EdgeId>{e(2, 3)}).empty());
    CHECK(validate_offer(free, std::vector<EdgeId>{e(2, 3), e(0, 1)}) ==
          std::vector<std::string>{"offer-size"});
  }

  TEST_CASE("client-waiter rounds") {
    Lowest waiter(Role::Blocker), client(Role::Builder);
    for (Rules r : {Rules::Free, Rules::Connected})
      for (int b : {0, 1, 2}) {
        Transcript t = run_client_waiter(cfg(5, b, Variant::ClientWaiter, r), waiter, client);
        REQUIRE(t.result);
        for (std::size_t i = 0; i < t.moves.size(); ++i) {
          const Move& m = t.moves[i];
          CHECK(m.s == static_cast<int>(i / 2) + 1);
          CHECK(m.k == static_cast<int>(i % 2));
          CHECK(m.role == (i % 2 ? Role::Builder : Role::Blocker));
        }
        CHECK_NOTHROW(replay(t));
      }
    Scripted bad_client({Action::choose(edge_index(3, 4, 5))});
    Scripted waiter2({Action::make_offer({0})});
    try {
      run_client_waiter(cfg(5, 1, Variant::ClientWaiter), waiter2, bad_client);
      FAIL("expected a rule violation");
    } catch (const RuleViolation& v) {
      CHECK(v.rule() == "choice-not-in-offer");
    }
  }

  TEST_CASE("client-waiter ends when nothing is offerable") {
    // Client builds the path 0-1-2-3 plus the even chord 03; Waiter takes every
    // other edge at {0, 1, 2, 3}, leaving only 45, which Client cannot reach.
    auto e = [](int u, int v) { return edge_index(u, v, 6); };
    Scripted waiter({Action::make_offer({e(0, 1), e(0, 2), e(0, 4), e(0, 5)}),
                     Action::make_offer({e(1, 2), e(1, 3), e(1, 4), e(1, 5)}),
                     Action::make_offer({e(2, 3), e(2, 4), e(2, 5)}),
                     Action::make_offer({e(0, 3), e(3, 4), e(3, 5)})});
    Scripted client({Action::choose(e(0, 1)), Action::choose(e(1, 2)), Action::choose(e(2, 3)),
                     Action::choose(e(0, 3))});
    const GameConfig c = cfg(6, 5, Variant::ClientWaiter, Rules::Connected);
    Transcript t = run_client_waiter(c, waiter, client);
    REQUIRE(t.result);
    CHECK(t.result->winner == Winner::Builder);
    CHECK(t.result->reason == EndReason::NoOfferableEdges);
    CHECK(t.moves.size() == 8);
    CHECK(replay(t).end_reason() == EndReason::NoOfferableEdges);
  }

  TEST_CASE("transcript json roundtrip") {
    for (Variant v : {Variant::MakerBreaker, Variant::ClientWaiter}) {
      const GameConfig c = cfg(7, 2, v, Rules::Connected, 42);
      auto builder = make_strategy(v == Variant::MakerBreaker ? "random-maker" : "random-client",
                                   c, Role::Builder);
      auto blocker = make_strategy(v == Variant::MakerBreaker ? "random-breaker" : "random-waiter",
                                   c, Role::Blocker);
      Transcript t = run_game(c, *builder, *blocker);
      const std::string text = dump_transcript(t);
      Transcript back = transcript_from_json(nlohmann::json::parse(text));
      CHECK(dump_transcript(back) == text);
      CHECK(back.config == c);
      CHECK(replay(back).digest() == t.digest);
    }
  }

  TEST_CASE("same seed, same game") {
    for (const char* name : {"random-maker", "greedy-maker", "maker-oc"}) {
      const GameConfig c = cfg(9, 2, Variant::MakerBreaker, Rules::Free, 7);
      auto run = [&] {
        auto m = make_strategy(name, c, Role::Builder);
        auto b = make_strategy("random-breaker", c, Role::Blocker);
        return dump_transcript(run_game(c, *m, *b));
      };
      CHECK(run() == run());
    }
  }

  TEST_CASE("replay rejects tampering") {
    const GameConfig c = cfg(6, 1, Variant::MakerBreaker, Rules::Free, 3);
    auto m = make_strategy("random-maker", c, Role::Builder);
    auto b = make_strategy("random-breaker", c, Role::Blocker);
    const Transcript t = run_game(c, *m, *b);
    REQUIRE(t.moves.size() >= 4);

    Transcript dropped = t;
    dropped.moves.erase(dropped.moves.begin() + 1);
    CHECK_THROWS_AS(replay(dropped), CorruptionError);

    Transcript digest = t;
    digest.digest = "0000000000000000";
    CHECK_THROWS_AS(replay(digest), CorruptionError);

    Transcript result = t;
    result.result->winner =
        t.result->winner == Winner::Builder ? Winner::Blocker : Winner::Builder;
    CHECK_THROWS_AS(replay(result), CorruptionError);

    Transcript stamp = t;
    stamp.moves[2].s += 1;
    CHECK_THROWS_AS(replay(stamp), CorruptionError);

    Transcript empty;
    empty.config = c;
    empty.digest = GameState(c).digest();
    CHECK(replay(empty).in_progress());
    empty.result = GameResult{Winner::Builder, EndReason::OddCycleClosed};
    CHECK_THROWS_AS(replay(empty), CorruptionError);
  }

  TEST_CASE("malformed transcript json") {
    CHECK_THROWS_AS(transcript_from_json(nlohmann::json::object()), ArgumentError);
    nlohmann::json j = to_json(Transcript{cfg(4, 1), {}, std::nullopt, GameState(cfg(4, 1)).digest()});
    j["version"] = 99;
    CHECK_THROWS_AS(transcript_from_json(j), ArgumentError);
    j["version"] = 1;
    j["config"]["n"] = 2;
    CHECK_THROWS_AS(transcript_from_json(j), ArgumentError);
    CHECK_THROWS_AS(load_transcript("/nonexistent/x.json"), ArgumentError);
  }
}
