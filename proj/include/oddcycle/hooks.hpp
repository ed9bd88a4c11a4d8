#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddcycle/engine.hpp"
#include "oddcycle/optimizer.hpp"
#include "oddcycle/strategies.hpp"

namespace oddcycle {

/// s, k, digest and both players' edge lists.
nlohmann::json state_snapshot(const GameState& state);

struct Violation {
  std::string hook;
  std::string message;
  int s = 0;
  int k = 0;
  std::string digest;
  nlohmann::json state;
};

// Shared sink for hook failures. In assert mode the first report throws
// InvariantViolation carrying the serialized position.
class ViolationLog {
 public:
  explicit ViolationLog(bool assert_mode = false) : assert_mode_(assert_mode) {}

  void report(const std::string& hook, const std::string& message, const GameState& state);
  const std::vector<Violation>& violations() const { return list_; }
  std::size_t count() const { return list_.size(); }
  bool assert_mode() const { return assert_mode_; }

 private:
  bool assert_mode_;
  std::vector<Violation> list_;
};

/// True when `move` is the last half-move of its round.
bool ends_round(const GameState& state, const Move& move);

/// Unclaimed edges between the two parts of the builder's graph.
long long saved_edges(const GameState& state);

struct MetricsSnapshot {
  int s = 0;
  int k = 0;
  long long e1 = 0;  // blocker edges V^1 - R
  long long e2 = 0;  // blocker edges V^2 - R
  long long ev = 0;  // blocker edges inside V
  Rational d{0};     // (e1 + e2) / |R|, zero when R is empty
  Rational d1{0};
  Rational d2{0};
  long long saved = 0;
};

MetricsSnapshot take_metrics(const GameState& state);

// Records a snapshot at every round boundary, or after every half-move.
class MetricsHook : public Hook {
 public:
  explicit MetricsHook(bool every_move = false) : every_move_(every_move) {}
  void after_move(const GameState& state, const Move& move) override;
  const std::vector<MetricsSnapshot>& snapshots() const { return snaps_; }

 private:
  bool every_move_;
  std::vector<MetricsSnapshot> snaps_;
};

// Connected Maker-Breaker: until the blocker's first (ii)(a) or (ii)(d) move,
// blocker degrees from untouched vertices into V differ by at most 2, and
// into each part by at most 1.
class DegreeRegularityHook : public Hook {
 public:
  explicit DegreeRegularityHook(ViolationLog& log) : log_(log) {}
  void on_start(const GameState&) override { active_ = true; }
  void after_move(const GameState& state, const Move& move) override;
  long long checks() const { return checks_; }

 private:
  ViolationLog& log_;
  bool active_ = true;
  long long checks_ = 0;
};

// Connected Maker-Breaker, checked when the blocker loses: no (ii)(a)/(ii)(d)
// move was played, and at the end of round t (the builder wins in round t+2)
// at most `bound` edges were saved.
class BreakerLossHook : public Hook {
 public:
  BreakerLossHook(ViolationLog& log, long long bound) : log_(log), bound_(bound) {}
  void on_start(const GameState& state) override;
  void after_move(const GameState& state, const Move& move) override;
  void on_end(const GameState& state, const Transcript& transcript) override;
  /// Saved edges at the end of each round s.
  const std::map<int, long long>& saved_history() const { return saved_; }
  long long losses_checked() const { return losses_; }

 private:
  ViolationLog& log_;
  long long bound_;
  bool bad_branch_ = false;
  std::string bad_tag_;
  std::map<int, long long> saved_;
  long long losses_ = 0;
};

// Connected Client-Waiter with client-connected as Client. After each round
// with no pending builder win: Client's graph is a tree, at most one part is
// critical, and every critical vertex has exactly one unclaimed edge to V.
// The forfeit clause (v) must never fire.
class ClientLemmaHook : public Hook {
 public:
  explicit ClientLemmaHook(ViolationLog& log) : log_(log) {}
  void after_move(const GameState& state, const Move& move) override;
  long long rounds_checked() const { return rounds_; }

 private:
  ViolationLog& log_;
  long long rounds_ = 0;
};

/// Structure of a lost maker-oc game: Maker's graph is a tree split as hubs
/// vs leaves, and (G_B, w_0, B_0, ...) passes gnb_membership. Empty when fine.
std::string maker_loss_problem(const GameState& final_state, const MakerPhase& phase);

// Runs maker_loss_problem at the end of every game the watched maker loses.
class MakerLossHook : public Hook {
 public:
  MakerLossHook(ViolationLog& log, const MakerOddCycle& maker) : log_(log), maker_(maker) {}
  void on_end(const GameState& state, const Transcript& transcript) override;
  long long losses_checked() const { return losses_; }

 private:
  ViolationLog& log_;
  const MakerOddCycle& maker_;
  long long losses_ = 0;
};

}  // namespace oddcycle
