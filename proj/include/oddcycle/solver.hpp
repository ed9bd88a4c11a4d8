#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "oddcycle/engine.hpp"

namespace oddcycle {

// Size guards. Defaults can be changed through ODDCYCLE_CAPACITY_OVERRIDE,
// e.g. "mb_n=7,cw_n=6,verify_nodes=200000000".
struct Capacity {
  int mb_n = 6;
  int cw_n = 5;
  long long verify_nodes = 100'000'000;
};

/// Parses an override string; throws ArgumentError on unknown keys or bad numbers.
Capacity parse_capacity(const std::string& text, Capacity base = {});
/// Defaults with ODDCYCLE_CAPACITY_OVERRIDE applied.
Capacity capacity_from_env();

// Largest n the packed state key supports (2 bits per edge in 64 bits).
inline constexpr int kSolverMaxN = 8;

struct SolverOptions {
  bool memo = true;
  bool canonical = false;  // memo key minimised over all vertex relabellings
  long long node_cap = 0;  // 0 = no limit
  Capacity capacity = capacity_from_env();
};

struct SolveResult {
  Winner winner = Winner::None;
  long long nodes = 0;
};

// Exact game values on a compact bitmask board. One instance keeps its memo
// table across queries, so repeated calls on positions of one game are cheap.
class ExactSolver {
 public:
  ExactSolver(const GameConfig& config, SolverOptions options = {});
  ~ExactSolver();
  ExactSolver(ExactSolver&&) noexcept;
  ExactSolver& operator=(ExactSolver&&) noexcept;

  /// Winner with optimal play from the start.
  Winner solve();
  /// Whether the builder wins from `state` with optimal play. For
  /// Client-Waiter `state` must be at a round boundary.
  bool builder_wins(const GameState& state);
  /// Builder value after Client takes `choice` from `offer` (Waiter gets the rest).
  bool builder_wins_after(const GameState& state, std::span<const EdgeId> offer, EdgeId choice);
  /// Offers Waiter may make from `state`, each sorted, in enumeration order.
  std::vector<std::vector<EdgeId>> legal_offers(const GameState& state) const;

  long long nodes() const;
  std::size_t memo_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Throws CapacityError above the guards and ArgumentError for a wrong variant.
SolveResult solve_mb(const GameConfig& config, const SolverOptions& options = {});
SolveResult solve_cw(const GameConfig& config, const SolverOptions& options = {});
SolveResult solve_game(const GameConfig& config, const SolverOptions& options = {});

/// Smallest b for which the blocker wins (b starts at 1 for Maker-Breaker, 0
/// for Client-Waiter), by linear search upward.
int exact_threshold(int n, Variant variant, Rules rules, const SolverOptions& options = {});

enum class Verdict { WinsAgainstAll, Counterexample };

struct VerificationResult {
  Verdict verdict = Verdict::WinsAgainstAll;
  std::optional<Transcript> counterexample;  // a shortest losing game
  long long nodes = 0;
  int max_depth = 0;  // in half-moves (rounds for Client-Waiter)
};

struct VerifyOptions {
  bool memo = true;
  long long node_cap = 0;  // 0 = capacity.verify_nodes
  Capacity capacity = capacity_from_env();
};

/// Plays `fixed` as `role` against every opponent line. Memo keys combine the
/// position with fixed.signature(). Hooks see after_move for every generated
/// move (on_start/on_end are not called). Throws CapacityError past the node cap.
VerificationResult verify_strategy(const GameConfig& config, const Strategy& fixed, Role role,
                                   HookList hooks = {}, const VerifyOptions& options = {});

// Strategy that plays a game-theoretically optimal move (lowest id among equals).
class SolverOracle : public Strategy {
 public:
  SolverOracle(const GameConfig& config, Role role);
  std::string name() const override { return "solver-oracle"; }
  Action act(const GameState& state, std::span<const EdgeId> offer) override;
  std::unique_ptr<Strategy> clone() const override;

 private:
  Role role_;
  std::shared_ptr<ExactSolver> solver_;
};

// ---------------------------------------------------------------------------
// Fixtures.

inline constexpr int kSolverVersion = 1;

/// Thresholds for Maker-Breaker n = 3..6 (free and connected) and connected
/// Client-Waiter n = 3..5, the winner at every b up to each threshold, and
/// verification verdicts for maker-oc and client-connected at small n.
nlohmann::json solver_fixtures(const SolverOptions& options = {});
std::string dump_fixtures(const nlohmann::json& j);

}  // namespace oddcycle
