#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "oddcycle/game_state.hpp"
#include "oddcycle/transcript.hpp"

namespace oddcycle {

// A player. Deterministic given its seed; returns a legal action or Forfeit.
// For Client, `offer` is the pending offer; it is empty for every other role.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual Action act(const GameState& state, std::span<const EdgeId> offer) = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;
  // Internal state that influences future actions, used as part of search
  // memo keys. Stateless strategies leave it empty.
  virtual void signature(std::vector<int>& /*out*/) const {}
};

// Observer called by the referee. Hooks never change the game.
class Hook {
 public:
  virtual ~Hook() = default;
  virtual void on_start(const GameState& /*state*/) {}
  // After every half-move; for Client-Waiter an Offer is reported before the
  // choice is applied.
  virtual void after_move(const GameState& /*state*/, const Move& /*move*/) {}
  virtual void on_end(const GameState& /*state*/, const Transcript& /*transcript*/) {}
};

using HookList = std::span<Hook* const>;

Transcript run_maker_breaker(const GameConfig& config, Strategy& maker, Strategy& breaker,
                             HookList hooks = {});
Transcript run_client_waiter(const GameConfig& config, Strategy& waiter, Strategy& client,
                             HookList hooks = {});
/// Dispatches on config.variant.
Transcript run_game(const GameConfig& config, Strategy& builder, Strategy& blocker,
                    HookList hooks = {});

/// Edges Waiter may currently include in an offer.
bool is_offerable(const GameState& state, EdgeId e);
std::vector<EdgeId> offerable_edges(const GameState& state);

/// Names of every violated offer clause; empty means the offer is valid.
/// Clauses: "offer-size", "offer-duplicate", "offer-claimed",
/// "connected-first-round-common-vertex", "connected-not-adjacent".
std::vector<std::string> validate_offer(const GameState& state, std::span<const EdgeId> offer);

/// Applies one Client-Waiter round: Client takes `choice`, Waiter the rest.
void apply_round(GameState& state, std::span<const EdgeId> offer, EdgeId choice);

/// Rebuilds the final position. Throws CorruptionError on illegal moves,
/// out-of-order (s, k) stamps, or a result/digest mismatch.
GameState replay(const Transcript& transcript);

}  // namespace oddcycle
