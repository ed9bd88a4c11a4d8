#include <doctest.h>

#include <random>

#include "oddcycle/errors.hpp"
#include "oddcycle/strategies.hpp"

using namespace oddcycle;

namespace {

GameConfig cfg(int n, int b, Variant v = Variant::MakerBreaker, Rules r = Rules::Free,
               std::uint64_t seed = 0) {
  return {n, b, v, r, seed};
}

void claim(GameState& st, Role role, int u, int v) { st.apply_claim(role, st.edge(u, v)); }

}  // namespace

TEST_SUITE("strategies") {
  TEST_CASE("maker-oc opens a star at the first hub") {
    GameState st(cfg(6, 1));
    MakerPhase phase = initial_maker_phase();
    Action a = maker_oc_move(st, phase);
    CHECK(a.branch == "maker-oc:(ii)");
    CHECK(a.edge == st.edge(0, 1));
    CHECK(phase.leaves[0] == std::vector<Vertex>{1});
  }

  TEST_CASE("maker-oc closes an available odd cycle first") {
    GameState st(cfg(6, 1));
    claim(st, Role::Builder, 0, 1);
    claim(st, Role::Builder, 0, 2);
    MakerPhase phase = initial_maker_phase();
    Action a = maker_oc_move(st, phase);
    CHECK(a.branch == "maker-oc:(i)");
    CHECK(a.edge == st.edge(1, 2));
  }

  TEST_CASE("maker-oc promotes a leaf neighbour to the next hub") {
    GameState st(cfg(6, 1));
    MakerPhase phase = initial_maker_phase();
    claim(st, Role::Builder, 0, 1);
    phase.leaves[0].push_back(1);
    for (int x = 2; x < 6; ++x) claim(st, Role::Blocker, 0, x);
    // R = {2, 3, 4, 5}; every vertex has blocker degree 0 <= |R| - b - 2 = 1.
    Action a = maker_oc_move(st, phase);
    CHECK(a.branch == "maker-oc:(iii)");
    CHECK(a.edge == st.edge(1, 2));
    CHECK(phase.hubs == std::vector<Vertex>{0, 2});
    CHECK(phase.leaves.size() == 2);
  }

  TEST_CASE("maker-oc forfeits or adapts when stuck") {
    GameState st(cfg(5, 1));
    claim(st, Role::Builder, 0, 1);
    for (int x = 2; x < 5; ++x) claim(st, Role::Blocker, 0, x);
    // |R| = 3 leaves a promotion limit of 0; make every R vertex exceed it.
    claim(st, Role::Blocker, 2, 3);
    claim(st, Role::Blocker, 3, 4);
    MakerPhase phase = initial_maker_phase();
    phase.leaves[0].push_back(1);
    MakerPhase copy = phase;
    Action a = maker_oc_move(st, phase);
    CHECK(a.kind == ActionKind::Forfeit);
    CHECK(a.branch == "maker-oc:(iv)");
    Action b = maker_oc_move(st, copy, true);
    CHECK(b.kind == ActionKind::Claim);
    CHECK(b.branch == "maker-oc:(iv)-adapted");
    CHECK(copy.deviated);
  }

  TEST_CASE("maker-oc state machine is part of the signature") {
    MakerOddCycle m;
    GameState st(cfg(6, 1));
    std::vector<int> before, after;
    m.signature(before);
    st.apply_claim(Role::Builder, m.act(st, {}).edge);
    m.signature(after);
    CHECK(before == after);  // (ii) keeps the hub list
    CHECK(m.phase().leaves[0].size() == 1);
    CHECK(m.clone()->name() == "maker-oc");
  }

  TEST_CASE("breaker-connected threat clause") {
    GameState st(cfg(6, 1, Variant::MakerBreaker, Rules::Connected));
    claim(st, Role::Builder, 0, 1);
    claim(st, Role::Blocker, 4, 5);
    claim(st, Role::Builder, 1, 2);
    Action a = breaker_connected_move(st);
    CHECK(a.branch == "breaker-connected:(i)");
    CHECK(a.edge == st.edge(0, 2));
    st.apply_claim(Role::Blocker, a.edge);
    claim(st, Role::Builder, 2, 3);
    claim(st, Role::Blocker, 3, 4);
    claim(st, Role::Builder, 0, 5);
    // 0 and 2 share a part, as do 1, 3 and 5: more threats than one claim.
    REQUIRE(st.threat_edges().size() >= 2);
    Action f = breaker_connected_move(st);
    CHECK(f.kind == ActionKind::Forfeit);
    CHECK(f.branch == "breaker-connected:(i)");
  }

  TEST_CASE("breaker-connected spreads into the lighter part") {
    GameState st(cfg(6, 2, Variant::MakerBreaker, Rules::Connected));
    claim(st, Role::Builder, 0, 1);
    Action a = breaker_connected_move(st);
    CHECK(a.branch == "breaker-connected:(ii)(b)");
    CHECK(a.edge == st.edge(0, 2));
    st.apply_claim(Role::Blocker, a.edge);
    // Part 1 = {0} now has one blocker edge into R, so part 2 = {1} is lighter;
    // ties go to the vertex with more blocker edges into part 1.
    Action b = breaker_connected_move(st);
    CHECK(b.branch == "breaker-connected:(ii)(b)");
    CHECK(b.edge == st.edge(1, 2));
  }

  TEST_CASE("breaker-connected cuts off a part when R is small") {
    GameState st(cfg(4, 3, Variant::MakerBreaker, Rules::Connected));
    claim(st, Role::Builder, 0, 1);
    // R = {2, 3}, |R| <= b; part 1 = {0} has two open edges to R.
    Action a = breaker_connected_move(st);
    CHECK(a.branch == "breaker-connected:(ii)(a)");
    CHECK(a.edge == st.edge(0, 2));
  }

  TEST_CASE("critical vertices match a naive recount") {
    std::mt19937_64 rng(5);
    for (int game = 0; game < 200; ++game) {
      const GameConfig c = cfg(7, 1 + game % 3, Variant::ClientWaiter, Rules::Connected, rng());
      auto client = make_strategy("random-client", c, Role::Builder);
      auto waiter = make_strategy("random-waiter", c, Role::Blocker);
      GameState st(c);
      while (st.in_progress() && !offerable_edges(st).empty()) {
        const CriticalReport rep = compute_critical(st);
        for (Vertex v = 0; v < c.n; ++v)
          for (int p : {1, 2}) {
            bool expect = !st.touched(v) && st.part_size(p) > 0;
            for (Vertex x = 0; x < c.n && expect; ++x)
              if (st.part(x) == p && st.owner(v, x) != Owner::Blocker) expect = false;
            CHECK(rep.critical(v, p) == expect);
          }
        CHECK(rep.critical_parts() == int(!rep.critical_to_v1.empty()) +
                                          int(!rep.critical_to_v2.empty()));
        Action offer = waiter->act(st, {});
        Action pick = client->act(st, offer.offer);
        apply_round(st, offer.offer, pick.edge);
      }
    }
  }

  TEST_CASE("client-connected clauses") {
    const GameConfig c = cfg(6, 2, Variant::ClientWaiter, Rules::Connected);
    GameState st(c);
    auto e = [&](int u, int v) { return st.edge(u, v); };
    CHECK(client_connected_move(st, std::vector<EdgeId>{e(0, 1), e(0, 2)}).branch ==
          "client-connected:(iv)");

    claim(st, Role::Builder, 0, 1);
    claim(st, Role::Builder, 1, 2);
    Action win = client_connected_move(st, std::vector<EdgeId>{e(1, 3), e(0, 2)});
    CHECK(win.branch == "client-connected:(i)");
    CHECK(win.edge == e(0, 2));

    claim(st, Role::Blocker, 0, 2);
    // Taking 23 puts 3 opposite 2, so the unclaimed 13 would join one part.
    Action threat = client_connected_move(st, std::vector<EdgeId>{e(2, 3)});
    CHECK(threat.branch == "client-connected:(ii)");

    GameState quiet(c);
    claim(quiet, Role::Builder, 0, 1);
    for (int x = 2; x < 6; ++x) claim(quiet, Role::Blocker, 1, x);
    // Part of 1 is critical for every R vertex; joining through 0 is preferred.
    Action a = client_connected_move(quiet, std::vector<EdgeId>{e(0, 2), e(2, 3)});
    CHECK(a.branch == "client-connected:(iii)");
    CHECK(a.edge == e(0, 2));
    Action r = client_connected_move(quiet, std::vector<EdgeId>{e(2, 3)});
    CHECK(r.branch == "client-connected:(iv)");

    GameState even(c);
    claim(even, Role::Builder, 0, 1);
    claim(even, Role::Builder, 1, 2);
    claim(even, Role::Builder, 2, 3);
    claim(even, Role::Blocker, 0, 2);
    claim(even, Role::Blocker, 1, 3);
    Action v = client_connected_move(even, std::vector<EdgeId>{e(0, 3)});
    CHECK(v.kind == ActionKind::Forfeit);
    CHECK(v.branch == "client-connected:(v)");
    CHECK_THROWS_AS(client_connected_move(even, {}), StateError);
  }

  TEST_CASE("uniform index") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(uniform_index(rng, 0), ArgumentError);
    for (std::uint64_t bound : {1ULL, 2ULL, 7ULL, 1000ULL})
      for (int i = 0; i < 200; ++i) CHECK(uniform_index(rng, bound) < bound);
    std::mt19937_64 a(9), b(9);
    for (int i = 0; i < 50; ++i) CHECK(uniform_index(a, 13) == uniform_index(b, 13));
  }

  TEST_CASE("registry") {
    const auto names = strategy_names();
    CHECK(names.size() == 12);
    const GameConfig mb = cfg(6, 1, Variant::MakerBreaker, Rules::Free, 4);
    const GameConfig cw = cfg(5, 1, Variant::ClientWaiter, Rules::Free, 4);
    for (const std::string& name : names) {
      for (const GameConfig& c : {mb, cw})
        for (Role r : {Role::Builder, Role::Blocker}) {
          bool fits = true;
          try {
            fits = name == "solver-oracle" || strategy_role(name, c.variant) == r;
          } catch (const ArgumentError&) {
            fits = false;
          }
          if (fits) {
            CHECK(make_strategy(name, c, r) != nullptr);
          } else {
            CHECK_THROWS_AS(make_strategy(name, c, r), ArgumentError);
          }
        }
    }
    CHECK_THROWS_AS(make_strategy("nobody", mb, Role::Builder), ArgumentError);
    CHECK_THROWS_AS(strategy_role("solver-oracle", Variant::MakerBreaker), ArgumentError);
    CHECK(strategy_role("breaker-connected", Variant::MakerBreaker) == Role::Blocker);
    CHECK(strategy_role("client-connected", Variant::ClientWaiter) == Role::Builder);
    CHECK(make_strategy("random-maker", mb, Role::Builder)->name() == "random-builder");
  }

  TEST_CASE("baselines play legal games") {
    const char* mb_builders[] = {"maker-oc", "maker-oc-adapted", "random-maker", "greedy-maker"};
    const char* mb_blockers[] = {"breaker-connected", "random-breaker", "greedy-breaker"};
    const char* cw_builders[] = {"client-connected", "random-client"};
    const char* cw_blockers[] = {"random-waiter", "greedy-waiter"};
    std::uint64_t seed = 100;
    for (Rules r : {Rules::Free, Rules::Connected})
      for (int n : {5, 8, 11})
        for (int b : {1, 2, 4}) {
          for (const char* x : mb_builders)
            for (const char* y : mb_blockers) {
              const GameConfig c = cfg(n, b, Variant::MakerBreaker, r, ++seed);
              auto bu = make_strategy(x, c, Role::Builder);
              auto bl = make_strategy(y, c, Role::Blocker);
              Transcript t = run_game(c, *bu, *bl);
              CHECK(t.result);
              CHECK_NOTHROW(replay(t));
            }
          for (const char* x : cw_builders)
            for (const char* y : cw_blockers) {
              const GameConfig c = cfg(n, b, Variant::ClientWaiter, r, ++seed);
              auto bu = make_strategy(x, c, Role::Builder);
              auto bl = make_strategy(y, c, Role::Blocker);
              Transcript t = run_game(c, *bu, *bl);
              CHECK(t.result);
              CHECK_NOTHROW(replay(t));
            }
        }
  }
}
