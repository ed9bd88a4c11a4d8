#include "oddcycle/hooks.hpp"

#include <algorithm>
#include <limits>

#include "oddcycle/errors.hpp"

namespace oddcycle {

nlohmann::json state_snapshot(const GameState& st) {
  nlohmann::json builder = nlohmann::json::array(), blocker = nlohmann::json::array();
  for (EdgeId e = 0; e < st.num_edges(); ++e) {
    if (st.owner(e) == Owner::Unclaimed) continue;
    auto [u, v] = st.endpoints(e);
    (st.owner(e) == Owner::Builder ? builder : blocker).push_back({u, v});
  }
  return {{"s", st.round()},
          {"k", st.turn_index()},
          {"digest", st.digest()},
          {"config", config_to_json(st.config())},
          {"builder", builder},
          {"blocker", blocker}};
}

void ViolationLog::report(const std::string& hook, const std::string& message,
                          const GameState& st) {
  Violation v{hook, message, st.round(), st.turn_index(), st.digest(), state_snapshot(st)};
  list_.push_back(v);
  if (assert_mode_)
    throw InvariantViolation(hook + ": " + message + " at (s=" + std::to_string(v.s) +
                             ", k=" + std::to_string(v.k) + ") state=" + v.state.dump());
}

bool ends_round(const GameState& st, const Move& m) {
  if (!st.in_progress()) return true;
  if (st.config().variant == Variant::ClientWaiter)
    return m.role == Role::Builder && m.action.kind == ActionKind::Choose;
  if (st.unclaimed_count() == 0) return true;
  return m.role == Role::Blocker && st.turn_index() == st.config().b;
}

long long saved_edges(const GameState& st) {
  const auto v1 = st.vertices_in(1), v2 = st.vertices_in(2);
  long long n = 0;
  for (Vertex x : v1)
    for (Vertex y : v2)
      if (st.owner(x, y) == Owner::Unclaimed) ++n;
  return n;
}

MetricsSnapshot take_metrics(const GameState& st) {
  MetricsSnapshot m;
  m.s = st.round();
  m.k = st.turn_index();
  m.e1 = st.blocker_edges_to_untouched(1);
  m.e2 = st.blocker_edges_to_untouched(2);
  for (EdgeId e = 0; e < st.num_edges(); ++e) {
    if (st.owner(e) != Owner::Blocker) continue;
    auto [u, v] = st.endpoints(e);
    if (st.touched(u) && st.touched(v)) ++m.ev;
  }
  const long long r = st.part_size(kUntouched);
  if (r > 0) {
    m.d = Rational(m.e1 + m.e2, r);
    m.d1 = Rational(m.e1, r);
    m.d2 = Rational(m.e2, r);
  }
  m.saved = saved_edges(st);
  return m;
}

void MetricsHook::after_move(const GameState& st, const Move& m) {
  if (every_move_ || ends_round(st, m)) snaps_.push_back(take_metrics(st));
}

// ---------------------------------------------------------------------------

namespace {

bool is_a_or_d(const std::string& branch) {
  return branch.find("(ii)(a)") != std::string::npos || branch.find("(ii)(d)") != std::string::npos;
}

}  // namespace

void DegreeRegularityHook::after_move(const GameState& st, const Move& m) {
  if (!active_) return;
  if (m.role == Role::Blocker && is_a_or_d(m.action.branch)) {
    active_ = false;
    return;
  }
  if (m.action.kind == ActionKind::Forfeit || !st.in_progress()) return;
  ++checks_;
  int lo[3], hi[3];
  std::fill(lo, lo + 3, std::numeric_limits<int>::max());
  std::fill(hi, hi + 3, std::numeric_limits<int>::min());
  for (Vertex v = 0; v < st.n(); ++v) {
    if (st.touched(v)) continue;
    const int d1 = st.blocker_degree(v, 1), d2 = st.blocker_degree(v, 2);
    const int d[3] = {d1 + d2, d1, d2};
    for (int i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], d[i]);
      hi[i] = std::max(hi[i], d[i]);
    }
  }
  if (lo[0] > hi[0]) return;  // R is empty
  if (hi[0] - lo[0] > 2)
    log_.report("degree-regularity",
                "degrees into V spread by " + std::to_string(hi[0] - lo[0]) + " > 2", st);
  for (int i : {1, 2})
    if (hi[i] - lo[i] > 1)
      log_.report("degree-regularity",
                  "degrees into V^" + std::to_string(i) + " spread by " +
                      std::to_string(hi[i] - lo[i]) + " > 1",
                  st);
}

void BreakerLossHook::on_start(const GameState&) {
  bad_branch_ = false;
  bad_tag_.clear();
  saved_.clear();
  saved_[0] = 0;
}

void BreakerLossHook::after_move(const GameState& st, const Move& m) {
  if (m.role == Role::Blocker && is_a_or_d(m.action.branch) && !bad_branch_) {
    bad_branch_ = true;
    bad_tag_ = m.action.branch + " at s=" + std::to_string(m.s) + ", k=" + std::to_string(m.k);
  }
  if (st.in_progress() && ends_round(st, m)) saved_[st.round()] = saved_edges(st);
}

void BreakerLossHook::on_end(const GameState& st, const Transcript&) {
  if (st.winner() != Winner::Builder) return;
  ++losses_;
  if (bad_branch_) log_.report("breaker-loss", "lost after playing " + bad_tag_, st);
  int t = -1;
  if (st.end_reason() == EndReason::OddCycleClosed) t = st.round() - 2;
  if (st.end_reason() == EndReason::BlockerForfeit) t = st.round() - 1;
  if (t < 0) return;
  auto it = saved_.find(t);
  if (it == saved_.end()) {
    log_.report("breaker-loss", "no saved-edge record for round " + std::to_string(t), st);
    return;
  }
  if (it->second > bound_)
    log_.report("breaker-loss",
                "saved " + std::to_string(it->second) + " edges by the end of round " +
                    std::to_string(t) + ", bound " + std::to_string(bound_),
                st);
}

void ClientLemmaHook::after_move(const GameState& st, const Move& m) {
  if (m.role != Role::Builder) return;
  if (m.action.branch.find("(v)") != std::string::npos) {
    log_.report("client-lemma", "forfeit clause (v) fired", st);
    return;
  }
  if (m.action.kind != ActionKind::Choose || !st.in_progress()) return;
  if (!st.threat_edges().empty()) return;  // pending builder win
  ++rounds_;

  const int touched = st.part_size(1) + st.part_size(2);
  if (st.builder_edge_count() != touched - 1)
    log_.report("client-lemma", "Client's graph is not a tree", st);

  const CriticalReport crit = compute_critical(st);
  if (crit.critical_parts() > 1) log_.report("client-lemma", "both parts are critical", st);
  for (int part : {1, 2}) {
    for (Vertex v : part == 1 ? crit.critical_to_v1 : crit.critical_to_v2) {
      int open = 0;
      for (Vertex x = 0; x < st.n(); ++x)
        if (st.touched(x) && st.owner(v, x) == Owner::Unclaimed) ++open;
      if (open != 1)
        log_.report("client-lemma",
                    "critical vertex " + std::to_string(v) + " has " + std::to_string(open) +
                        " unclaimed edges to V",
                    st);
    }
  }
}

// ---------------------------------------------------------------------------

std::string maker_loss_problem(const GameState& st, const MakerPhase& phase) {
  const int n = st.n();
  std::vector<int> side(n, 0);  // 1 hub, 2 leaf
  for (Vertex w : phase.hubs) side[w] = 1;
  std::size_t leaf_count = 0;
  for (const auto& b : phase.leaves) {
    leaf_count += b.size();
    for (Vertex x : b) side[x] = 2;
  }
  const std::size_t tree_vertices = phase.hubs.size() + leaf_count;
  if (st.builder_edge_count() != static_cast<int>(tree_vertices) - 1)
    return "Maker has " + std::to_string(st.builder_edge_count()) + " edges on " +
           std::to_string(tree_vertices) + " hub/leaf vertices";
  std::vector<std::pair<Vertex, Vertex>> blocker;
  for (EdgeId e = 0; e < st.num_edges(); ++e) {
    auto [u, v] = st.endpoints(e);
    if (st.owner(e) == Owner::Blocker) {
      blocker.emplace_back(u, v);
    } else if (st.owner(e) == Owner::Builder && (side[u] == 0 || side[v] == 0 || side[u] == side[v])) {
      return "Maker edge " + std::to_string(u) + "-" + std::to_string(v) +
             " does not join a hub to a leaf";
    }
  }
  // Edge count plus hub/leaf bipartiteness leaves connectivity to check.
  const Vertex root = phase.hubs.front();
  for (Vertex v = 0; v < n; ++v)
    if (side[v] != 0 && !st.forest().connected(root, v))
      return "Maker's graph is not connected at vertex " + std::to_string(v);
  Membership mem = gnb_membership(n, st.config().b, blocker, GnbLabels{phase.hubs, phase.leaves});
  if (!mem.member) return "Breaker's graph fails clause (" + mem.clause + "): " + mem.detail;
  return {};
}

void MakerLossHook::on_end(const GameState& st, const Transcript&) {
  if (st.winner() != Winner::Blocker) return;
  ++losses_;
  std::string problem = maker_loss_problem(st, maker_.phase());
  if (!problem.empty()) log_.report("maker-loss", problem, st);
}

}  // namespace oddcycle
