#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "oddcycle/engine.hpp"

namespace oddcycle {

// ---------------------------------------------------------------------------
// Maker: grow stars around successive hubs, close an odd cycle when possible.
//
// Maker's graph stays a tree whose two sides are the hubs w_0..w_k and the
// leaves B_0 u ... u B_k, where B_i are the leaves attached while w_i was the
// active hub.
struct MakerPhase {
  std::vector<Vertex> hubs;                 // w_0 .. w_k
  std::vector<std::vector<Vertex>> leaves;  // B_0 .. B_k
  bool deviated = false;                    // adapted mode left the hub/leaf pattern

  int index() const { return static_cast<int>(hubs.size()) - 1; }
};

MakerPhase initial_maker_phase(Vertex first_hub = 0);

/// One Maker move. Clauses in order: close an odd cycle, extend the active
/// hub into R, promote a fresh vertex of blocker-degree into R \ {u} at most
/// |R| - b - 2 to the next hub, otherwise forfeit. With `adapted` the last
/// clause claims the lowest legal edge instead (preferring edges into R).
Action maker_oc_move(const GameState& state, MakerPhase& phase, bool adapted = false);

class MakerOddCycle : public Strategy {
 public:
  explicit MakerOddCycle(bool adapted = false, Vertex first_hub = 0)
      : adapted_(adapted), phase_(initial_maker_phase(first_hub)) {}
  std::string name() const override { return adapted_ ? "maker-oc-adapted" : "maker-oc"; }
  Action act(const GameState& state, std::span<const EdgeId> offer) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<MakerOddCycle>(*this);
  }
  void signature(std::vector<int>& out) const override;
  const MakerPhase& phase() const { return phase_; }

 private:
  bool adapted_;
  MakerPhase phase_;
};

// ---------------------------------------------------------------------------
// Breaker for connected Maker-Breaker: kill threats, then spread his edges
// evenly from R into both of Maker's parts.
Action breaker_connected_move(const GameState& state);

class BreakerConnected : public Strategy {
 public:
  std::string name() const override { return "breaker-connected"; }
  Action act(const GameState& state, std::span<const EdgeId>) override {
    return breaker_connected_move(state);
  }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<BreakerConnected>(*this);
  }
};

// ---------------------------------------------------------------------------
// Client for connected Client-Waiter.

// Criticality of untouched vertices w.r.t. the parts of the builder's graph:
// v in R is critical to V^i when V^i is non-empty and every v-V^i edge is
// owned by the blocker.
struct CriticalReport {
  std::vector<Vertex> critical_to_v1;
  std::vector<Vertex> critical_to_v2;
  bool part1_critical = false;
  bool part2_critical = false;

  bool critical(Vertex v, int part) const;
  int critical_parts() const { return int(part1_critical) + int(part2_critical); }
};

CriticalReport compute_critical(const GameState& state);

Action client_connected_move(const GameState& state, std::span<const EdgeId> offer);

class ClientConnected : public Strategy {
 public:
  std::string name() const override { return "client-connected"; }
  Action act(const GameState& state, std::span<const EdgeId> offer) override {
    return client_connected_move(state, offer);
  }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<ClientConnected>(*this);
  }
};

// ---------------------------------------------------------------------------
// Baselines.

/// Uniform integer in [0, bound) from a 64-bit engine, identical on every platform.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound);

class RandomPlayer : public Strategy {
 public:
  RandomPlayer(Role role, std::uint64_t seed) : role_(role), rng_(seed) {}
  std::string name() const override;
  Action act(const GameState& state, std::span<const EdgeId> offer) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<RandomPlayer>(*this);
  }

 private:
  Role role_;
  std::mt19937_64 rng_;
};

// Claims a threat if any, else the unclaimed edge whose endpoints carry the
// most builder edges (lowest id on ties).
class GreedyBreaker : public Strategy {
 public:
  std::string name() const override { return "greedy-breaker"; }
  Action act(const GameState& state, std::span<const EdgeId>) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<GreedyBreaker>(*this);
  }
};

// Closes an odd cycle if possible, else attaches the fresh vertex that
// creates the most new threats.
class GreedyMaker : public Strategy {
 public:
  std::string name() const override { return "greedy-maker"; }
  Action act(const GameState& state, std::span<const EdgeId>) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<GreedyMaker>(*this);
  }
};

// Offers up to b+1 edges from one untouched vertex into the larger part of
// Client's graph. Intra-part edges are offered only when nothing else is left.
class GreedyWaiter : public Strategy {
 public:
  std::string name() const override { return "greedy-waiter"; }
  Action act(const GameState& state, std::span<const EdgeId>) override;
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<GreedyWaiter>(*this);
  }
};

// ---------------------------------------------------------------------------
// Registry.

/// Known names: maker-oc, maker-oc-adapted, breaker-connected, client-connected,
/// random-maker, random-breaker, random-waiter, random-client, greedy-maker,
/// greedy-breaker, greedy-waiter, solver-oracle.
std::vector<std::string> strategy_names();

/// Builds a strategy for `role`; seeded strategies derive their stream from
/// config.seed and the role. Throws ArgumentError for unknown names or names
/// that do not fit the role/variant.
std::unique_ptr<Strategy> make_strategy(const std::string& name, const GameConfig& config,
                                        Role role);

/// Role a strategy name plays, if fixed by the name.
Role strategy_role(const std::string& name, Variant variant);

}  // namespace oddcycle
