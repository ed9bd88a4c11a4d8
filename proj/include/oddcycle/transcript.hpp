#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddcycle/game_state.hpp"

namespace oddcycle {

enum class ActionKind { Claim, Offer, Choose, Forfeit };

// What a player does on one half-move. `branch` names the strategy clause
// that produced it (e.g. "breaker-connected:(ii)(b)"), empty for untagged players.
struct Action {
  ActionKind kind = ActionKind::Claim;
  EdgeId edge = -1;
  std::vector<EdgeId> offer;
  std::string reason;
  std::string branch;

  static Action claim(EdgeId e, std::string branch = {});
  static Action make_offer(std::vector<EdgeId> edges, std::string branch = {});
  static Action choose(EdgeId e, std::string branch = {});
  static Action forfeit(std::string reason, std::string branch = {});
};

struct Move {
  int s = 0;
  int k = 0;
  Role role = Role::Builder;
  Action action;
};

struct GameResult {
  Winner winner = Winner::None;
  EndReason reason = EndReason::None;
  bool operator==(const GameResult&) const = default;
};

struct Transcript {
  static constexpr int kVersion = 1;
  GameConfig config;
  std::vector<Move> moves;
  std::optional<GameResult> result;
  std::string digest;

  /// Round index of the last builder move (t).
  int final_round() const;
};

nlohmann::json to_json(const Transcript& t);
Transcript transcript_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const GameConfig& c);
GameConfig config_from_json(const nlohmann::json& j);

/// Two-space indented JSON with a trailing newline; stable across platforms.
std::string dump_transcript(const Transcript& t);
Transcript load_transcript(const std::string& path);

}  // namespace oddcycle
