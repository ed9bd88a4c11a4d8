#include "oddcycle/game_state.hpp"

#include <algorithm>
#include <cstdio>

#include "oddcycle/errors.hpp"

namespace oddcycle {

std::string_view to_string(Variant v) {
  return v == Variant::MakerBreaker ? "maker-breaker" : "client-waiter";
}

std::string_view to_string(Rules r) { return r == Rules::Free ? "free" : "connected"; }

std::string_view to_string(Winner w) {
  switch (w) {
    case Winner::Builder: return "builder";
    case Winner::Blocker: return "blocker";
    default: return "none";
  }
}

std::string_view to_string(EndReason r) {
  switch (r) {
    case EndReason::OddCycleClosed: return "odd-cycle-closed";
    case EndReason::BoardExhausted: return "board-exhausted";
    case EndReason::BuilderForfeit: return "builder-forfeit";
    case EndReason::BlockerForfeit: return "blocker-forfeit";
    case EndReason::NoLegalBuilderMove: return "no-legal-builder-move";
    case EndReason::NoOfferableEdges: return "no-offerable-edges";
    default: return "none";
  }
}

Variant parse_variant(std::string_view s) {
  if (s == "maker-breaker" || s == "mb") return Variant::MakerBreaker;
  if (s == "client-waiter" || s == "cw") return Variant::ClientWaiter;
  throw ArgumentError("unknown variant '" + std::string(s) + "'");
}

Rules parse_rules(std::string_view s) {
  if (s == "free") return Rules::Free;
  if (s == "connected") return Rules::Connected;
  throw ArgumentError("unknown rules '" + std::string(s) + "'");
}

Winner parse_winner(std::string_view s) {
  if (s == "builder") return Winner::Builder;
  if (s == "blocker") return Winner::Blocker;
  if (s == "none") return Winner::None;
  throw ArgumentError("unknown winner '" + std::string(s) + "'");
}

EndReason parse_end_reason(std::string_view s) {
  for (auto r : {EndReason::None, EndReason::OddCycleClosed, EndReason::BoardExhausted,
                 EndReason::BuilderForfeit, EndReason::BlockerForfeit,
                 EndReason::NoLegalBuilderMove, EndReason::NoOfferableEdges}) {
    if (to_string(r) == s) return r;
  }
  throw ArgumentError("unknown end reason '" + std::string(s) + "'");
}

std::string_view role_name(Variant v, Role r) {
  if (v == Variant::MakerBreaker) return r == Role::Builder ? "maker" : "breaker";
  return r == Role::Builder ? "client" : "waiter";
}

Role parse_role(Variant v, std::string_view s) {
  if (s == role_name(v, Role::Builder) || s == "builder") return Role::Builder;
  if (s == role_name(v, Role::Blocker) || s == "blocker") return Role::Blocker;
  throw ArgumentError("unknown role '" + std::string(s) + "' for " + std::string(to_string(v)));
}

void GameConfig::validate() const {
  if (n < 3) throw ArgumentError("n must be at least 3, got " + std::to_string(n));
  if (b < 0) throw ArgumentError("b must be non-negative, got " + std::to_string(b));
  if (variant == Variant::MakerBreaker && b < 1)
    throw ArgumentError("Maker-Breaker needs b >= 1, got " + std::to_string(b));
}

GameState::GameState(const GameConfig& config)
    : config_(config),
      table_(std::make_shared<const EdgeTable>(config.n)),
      owner_(edge_count(config.n), Owner::Unclaimed),
      forest_(config.n),
      part_(config.n, kUntouched),
      bdeg_(3 * config.n, 0),
      builder_deg_(config.n, 0) {
  config_.validate();
  part_size_[0] = config.n;
  unclaimed_ = num_edges();
}

std::vector<Vertex> GameState::vertices_in(int p) const {
  std::vector<Vertex> out;
  out.reserve(part_size_[p]);
  for (Vertex v = 0; v < n(); ++v)
    if (part_[v] == p) out.push_back(v);
  return out;
}

PartDegrees GameState::part_degrees(Vertex v) const {
  return {bdeg_[3 * v + 1], bdeg_[3 * v + 2], bdeg_[3 * v + 0]};
}

long long GameState::blocker_edges_to_untouched(int p) const {
  long long total = 0;
  for (Vertex v = 0; v < n(); ++v)
    if (part_[v] == kUntouched) total += bdeg_[3 * v + p];
  return total;
}

bool GameState::closes_odd_cycle(EdgeId e) const {
  if (owner_[e] != Owner::Unclaimed)
    throw StateError("closes_odd_cycle: edge " + std::to_string(e) + " already claimed");
  auto [a, b] = endpoints(e);
  if (!touched(a) || !touched(b)) return false;
  return forest_.closes_odd_cycle(a, b);
}

bool GameState::touches_builder_graph(EdgeId e) const {
  auto [a, b] = endpoints(e);
  return touched(a) || touched(b);
}

bool GameState::is_legal_builder_move(EdgeId e) const {
  if (owner_[e] != Owner::Unclaimed) return false;
  if (config_.rules == Rules::Free || builder_edges_ == 0) return true;
  return touches_builder_graph(e);
}

std::vector<EdgeId> GameState::legal_builder_moves() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < num_edges(); ++e)
    if (is_legal_builder_move(e)) out.push_back(e);
  return out;
}

bool GameState::has_legal_builder_move() const {
  for (EdgeId e = 0; e < num_edges(); ++e)
    if (is_legal_builder_move(e)) return true;
  return false;
}

std::vector<Vertex> GameState::component_of(Vertex v) const {
  Vertex root = forest_.find(v).first;
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n(); ++x)
    if (touched(x) && forest_.find(x).first == root) out.push_back(x);
  return out;
}

void GameState::move_vertex(Vertex v, int to) {
  int from = part_[v];
  if (from == to) return;
  for (Vertex y = 0; y < n(); ++y) {
    if (y == v || owner_[edge(v, y)] != Owner::Blocker) continue;
    --bdeg_[3 * y + from];
    ++bdeg_[3 * y + to];
  }
  --part_size_[from];
  ++part_size_[to];
  part_[v] = static_cast<std::int8_t>(to);
}

void GameState::add_threats_for(const std::vector<Vertex>& fresh,
                                 const std::vector<Vertex>& others) {
  for (Vertex a : fresh)
    for (Vertex b : others) {
      if (a == b || part_[a] != part_[b]) continue;
      EdgeId e = edge(a, b);
      if (owner_[e] == Owner::Unclaimed) threats_.push_back(e);
    }
}

void GameState::apply_claim(Role role, EdgeId e) {
  if (e < 0 || e >= num_edges())
    throw ArgumentError("apply_claim: edge id " + std::to_string(e) + " out of range");
  if (!in_progress()) throw RuleViolation("game-over", "claim after the game ended");
  if (owner_[e] != Owner::Unclaimed)
    throw RuleViolation("edge-already-claimed", "edge " + std::to_string(e) + " is claimed");
  if (role == Role::Builder && config_.variant == Variant::MakerBreaker &&
      !is_legal_builder_move(e))
    throw RuleViolation("connected-rule",
                        "edge " + std::to_string(e) + " does not touch Maker's graph");

  auto [a, b] = endpoints(e);
  if (auto it = std::find(threats_.begin(), threats_.end(), e); it != threats_.end())
    threats_.erase(it);
  --unclaimed_;

  if (role == Role::Blocker) {
    owner_[e] = Owner::Blocker;
    ++bdeg_[3 * a + part_[b]];
    ++bdeg_[3 * b + part_[a]];
    ++turn_index_;
  } else {
    ++round_;
    turn_index_ = 0;
    bool odd = touched(a) && touched(b) && forest_.closes_odd_cycle(a, b);
    owner_[e] = Owner::Builder;
    ++builder_edges_;
    ++builder_deg_[a];
    ++builder_deg_[b];
    if (odd) {
      finish(Winner::Builder, EndReason::OddCycleClosed);
      return;
    }
    if (!touched(a) && !touched(b)) {
      move_vertex(a, 1);
      move_vertex(b, 2);
      forest_.unite(a, b);
    } else if (!touched(a) || !touched(b)) {
      Vertex fresh = touched(a) ? b : a;
      Vertex anchor = touched(a) ? a : b;
      move_vertex(fresh, 3 - part_[anchor]);
      std::vector<Vertex> comp = component_of(anchor);
      forest_.unite(a, b);
      add_threats_for({fresh}, comp);
    } else if (!forest_.connected(a, b)) {
      std::vector<Vertex> ca = component_of(a);
      std::vector<Vertex> cb = component_of(b);
      if (part_[a] == part_[b]) {
        auto& smaller = ca.size() < cb.size() ? ca : cb;
        for (Vertex x : smaller) move_vertex(x, 3 - part_[x]);
      }
      forest_.unite(a, b);
      add_threats_for(ca, cb);
    } else {
      // Even cycle inside one component: parts unchanged.
    }
  }
  if (unclaimed_ == 0 && in_progress()) finish(Winner::Blocker, EndReason::BoardExhausted);
}

void GameState::finish(Winner w, EndReason r) {
  winner_ = w;
  reason_ = r;
}

std::string GameState::digest_of(const std::vector<Owner>& ownership) {
  std::uint64_t h = 1469598103934665603ull;
  for (Owner o : ownership) {
    h ^= static_cast<std::uint8_t>(o);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string GameState::digest() const { return digest_of(owner_); }

}  // namespace oddcycle
