#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "oddcycle/edge.hpp"
#include "oddcycle/parity_forest.hpp"

namespace oddcycle {

enum class Variant { MakerBreaker, ClientWaiter };
enum class Rules { Free, Connected };

// Builder = Maker or Client, Blocker = Breaker or Waiter.
enum class Role { Builder, Blocker };
enum class Owner : std::uint8_t { Unclaimed = 0, Builder = 1, Blocker = 2 };
enum class Winner { None, Builder, Blocker };

enum class EndReason {
  None,
  OddCycleClosed,
  BoardExhausted,
  BuilderForfeit,
  BlockerForfeit,
  NoLegalBuilderMove,
  NoOfferableEdges,
};

std::string_view to_string(Variant v);
std::string_view to_string(Rules r);
std::string_view to_string(Winner w);
std::string_view to_string(EndReason r);
Variant parse_variant(std::string_view s);
Rules parse_rules(std::string_view s);
Winner parse_winner(std::string_view s);
EndReason parse_end_reason(std::string_view s);

/// Name of a role in the configured variant ("maker", "breaker", "client", "waiter").
std::string_view role_name(Variant v, Role r);
Role parse_role(Variant v, std::string_view s);

struct GameConfig {
  int n = 3;
  int b = 1;
  Variant variant = Variant::MakerBreaker;
  Rules rules = Rules::Free;
  std::uint64_t seed = 0;

  /// Throws ArgumentError unless n >= 3, b >= 0, and b >= 1 for Maker-Breaker.
  void validate() const;
  bool operator==(const GameConfig&) const = default;
};

struct PartDegrees {
  int to_v1 = 0;
  int to_v2 = 0;
  int to_r = 0;
  bool operator==(const PartDegrees&) const = default;
};

// Vertex part labels. kUntouched marks membership of R.
inline constexpr int kUntouched = 0;

// Full game position on K_n. A plain value: copy it to branch.
//
// The builder's graph is kept 2-coloured: part(v) in {1, 2} for touched
// vertices. While the builder's graph is connected the labels never change;
// in free play, joining two components with clashing labels relabels the
// smaller one.
class GameState {
 public:
  explicit GameState(const GameConfig& config);

  const GameConfig& config() const { return config_; }
  int n() const { return config_.n; }
  int num_edges() const { return static_cast<int>(owner_.size()); }
  const EdgeTable& edges() const { return *table_; }
  std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return table_->endpoints(e); }
  EdgeId edge(Vertex a, Vertex b) const { return edge_between(a, b, config_.n); }

  Owner owner(EdgeId e) const { return owner_[e]; }
  Owner owner(Vertex a, Vertex b) const { return owner_[edge(a, b)]; }
  const std::vector<Owner>& ownership() const { return owner_; }
  int unclaimed_count() const { return unclaimed_; }
  int builder_edge_count() const { return builder_edges_; }
  int blocker_edge_count() const { return num_edges() - unclaimed_ - builder_edges_; }

  int part(Vertex v) const { return part_[v]; }
  bool touched(Vertex v) const { return part_[v] != kUntouched; }
  /// |R| for p = 0, |V^1| and |V^2| for p = 1, 2.
  int part_size(int p) const { return part_size_[p]; }
  std::vector<Vertex> vertices_in(int p) const;
  int builder_degree(Vertex v) const { return builder_deg_[v]; }

  /// Blocker edges from v into part p (p = 0 counts R without v itself).
  int blocker_degree(Vertex v, int p) const { return bdeg_[3 * v + p]; }
  PartDegrees part_degrees(Vertex v) const;
  /// e(V^p, R) in the blocker's graph.
  long long blocker_edges_to_untouched(int p) const;

  /// Round counter s (builder claims so far) and blocker claims in the current turn k.
  int round() const { return round_; }
  int turn_index() const { return turn_index_; }

  Winner winner() const { return winner_; }
  EndReason end_reason() const { return reason_; }
  bool in_progress() const { return winner_ == Winner::None; }

  /// True iff claiming the unclaimed edge e for the builder closes an odd cycle.
  /// Throws StateError if e is already claimed.
  bool closes_odd_cycle(EdgeId e) const;
  bool touches_builder_graph(EdgeId e) const;
  bool is_legal_builder_move(EdgeId e) const;
  std::vector<EdgeId> legal_builder_moves() const;
  bool has_legal_builder_move() const;

  /// Unclaimed edges that would close an odd cycle for the builder.
  const std::vector<EdgeId>& threat_edges() const { return threats_; }

  /// Claims e for the given side, updating parts, counters and status.
  /// Throws RuleViolation for claimed edges, finished games and (Maker-Breaker,
  /// connected rules) builder edges not touching the builder's graph.
  void apply_claim(Role role, EdgeId e);

  void finish(Winner w, EndReason r);

  /// Hex FNV-1a 64 of the ownership bytes in edge-id order.
  std::string digest() const;
  static std::string digest_of(const std::vector<Owner>& ownership);

  const ParityForest& forest() const { return forest_; }

 private:
  void move_vertex(Vertex v, int to);
  void add_threats_for(const std::vector<Vertex>& fresh, const std::vector<Vertex>& others);
  std::vector<Vertex> component_of(Vertex v) const;

  GameConfig config_;
  std::shared_ptr<const EdgeTable> table_;
  std::vector<Owner> owner_;
  ParityForest forest_;
  std::vector<std::int8_t> part_;
  std::vector<int> bdeg_;  // 3 entries per vertex
  std::vector<int> builder_deg_;
  std::vector<EdgeId> threats_;
  int part_size_[3] = {0, 0, 0};
  int unclaimed_ = 0;
  int builder_edges_ = 0;
  int round_ = 0;
  int turn_index_ = 0;
  Winner winner_ = Winner::None;
  EndReason reason_ = EndReason::None;
};

}  // namespace oddcycle
