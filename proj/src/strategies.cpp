#include "oddcycle/strategies.hpp"

#include <algorithm>
#include <limits>

#include "oddcycle/errors.hpp"

namespace oddcycle {

namespace {

EdgeId lowest(const std::vector<EdgeId>& edges) {
  return *std::min_element(edges.begin(), edges.end());
}

// Lowest-id unclaimed edge between v and any vertex of `side` (sorted).
EdgeId lowest_unclaimed_to(const GameState& st, Vertex v, const std::vector<Vertex>& side) {
  EdgeId best = -1;
  for (Vertex x : side) {
    EdgeId e = st.edge(v, x);
    if (st.owner(e) != Owner::Unclaimed) continue;
    if (best < 0 || e < best) best = e;
    // Ids grow with x as long as x < v; past v the first hit is minimal too.
    if (x > v) break;
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------

MakerPhase initial_maker_phase(Vertex first_hub) {
  MakerPhase p;
  p.hubs.push_back(first_hub);
  p.leaves.emplace_back();
  return p;
}

Action maker_oc_move(const GameState& st, MakerPhase& phase, bool adapted) {
  if (phase.hubs.empty()) throw StateError("maker_oc_move: phase has no hub");
  const Vertex hub = phase.hubs.back();
  if (st.builder_edge_count() > 0 && !st.touched(hub))
    throw StateError("maker_oc_move: active hub " + std::to_string(hub) +
                     " is not in Maker's graph");

  if (!st.threat_edges().empty()) return Action::claim(lowest(st.threat_edges()), "maker-oc:(i)");

  for (Vertex u = 0; u < st.n(); ++u) {
    if (u == hub || st.touched(u)) continue;
    if (st.owner(hub, u) == Owner::Unclaimed) {
      phase.leaves.back().push_back(u);
      return Action::claim(st.edge(hub, u), "maker-oc:(ii)");
    }
  }

  // (iii): u in R, unclaimed edge to a non-hub vertex of Maker's graph, and
  // blocker-degree into R \ {u} at most |R| - b - 2.
  const int r = st.part_size(kUntouched);
  const int limit = r - st.config().b - 2;
  std::vector<char> is_hub(st.n(), 0);
  for (Vertex w : phase.hubs) is_hub[w] = 1;
  EdgeId pick = -1;
  Vertex pick_u = -1;
  for (Vertex u = 0; u < st.n(); ++u) {
    if (st.touched(u) || st.blocker_degree(u, kUntouched) > limit) continue;
    for (Vertex x = 0; x < st.n(); ++x) {
      if (!st.touched(x) || is_hub[x]) continue;
      EdgeId e = st.edge(u, x);
      if (st.owner(e) == Owner::Unclaimed && (pick < 0 || e < pick)) {
        pick = e;
        pick_u = u;
      }
    }
  }
  if (pick >= 0) {
    phase.hubs.push_back(pick_u);
    phase.leaves.emplace_back();
    return Action::claim(pick, "maker-oc:(iii)");
  }

  if (!adapted) return Action::forfeit("no hub extension or promotion available", "maker-oc:(iv)");

  // Adapted fallback: keep playing, preferring edges that add a fresh vertex.
  EdgeId fresh = -1, any = -1;
  for (EdgeId e = 0; e < st.num_edges(); ++e) {
    if (!st.is_legal_builder_move(e)) continue;
    if (any < 0) any = e;
    auto [a, b] = st.endpoints(e);
    if (st.touched(a) != st.touched(b)) {
      fresh = e;
      break;
    }
  }
  EdgeId e = fresh >= 0 ? fresh : any;
  if (e < 0) return Action::forfeit("no legal move", "maker-oc:(iv)");
  phase.deviated = true;
  return Action::claim(e, "maker-oc:(iv)-adapted");
}

Action MakerOddCycle::act(const GameState& state, std::span<const EdgeId>) {
  return maker_oc_move(state, phase_, adapted_);
}

void MakerOddCycle::signature(std::vector<int>& out) const {
  out.insert(out.end(), phase_.hubs.begin(), phase_.hubs.end());
  out.push_back(phase_.deviated ? 1 : 0);
}

// ---------------------------------------------------------------------------

Action breaker_connected_move(const GameState& st) {
  const int b = st.config().b;
  const int done = st.turn_index();
  // Claims left in this turn, this one included.
  const int left = std::min(b, done + st.unclaimed_count()) - done;

  const auto& threats = st.threat_edges();
  if (!threats.empty()) {
    if (static_cast<int>(threats.size()) > left)
      return Action::forfeit("more threats than claims left", "breaker-connected:(i)");
    return Action::claim(lowest(threats), "breaker-connected:(i)");
  }

  const std::vector<Vertex> rest = st.vertices_in(kUntouched);
  const std::vector<Vertex> side[3] = {{}, st.vertices_in(1), st.vertices_in(2)};
  const long long r = static_cast<long long>(rest.size());
  const long long e1 = st.blocker_edges_to_untouched(1);
  const long long e2 = st.blocker_edges_to_untouched(2);
  const int i1 = e1 <= e2 ? 1 : 2;
  const int i2 = 3 - i1;
  auto unclaimed_to_r = [&](int i) { return side[i].size() * r - (i == 1 ? e1 : e2); };

  // (a): few untouched vertices and one part can be fully cut off this turn.
  if (r <= b) {
    for (int i : {1, 2}) {
      long long open = unclaimed_to_r(i);
      if (open >= 1 && open <= left) {
        EdgeId best = -1;
        for (Vertex v : rest) {
          EdgeId e = lowest_unclaimed_to(st, v, side[i]);
          if (e >= 0 && (best < 0 || e < best)) best = e;
        }
        return Action::claim(best, "breaker-connected:(ii)(a)");
      }
    }
  }

  // (b)/(c): edge from V^i to a vertex of R with minimal degree into V^i.
  auto spread = [&](int i, int other, bool tie_on_other) -> EdgeId {
    if (unclaimed_to_r(i) <= 0) return -1;
    const int full = static_cast<int>(side[i].size());
    int best_deg = std::numeric_limits<int>::max();
    int best_gap = std::numeric_limits<int>::min();
    std::vector<Vertex> tied;
    for (Vertex v : rest) {
      int d = st.blocker_degree(v, i);
      if (d >= full) continue;
      int gap = tie_on_other ? st.blocker_degree(v, other) - d : 0;
      if (d < best_deg || (d == best_deg && gap > best_gap)) {
        best_deg = d;
        best_gap = gap;
        tied.assign(1, v);
      } else if (d == best_deg && gap == best_gap) {
        tied.push_back(v);
      }
    }
    EdgeId best = -1;
    for (Vertex v : tied) {
      EdgeId e = lowest_unclaimed_to(st, v, side[i]);
      if (e >= 0 && (best < 0 || e < best)) best = e;
    }
    return best;
  };
  if (EdgeId e = spread(i1, i2, true); e >= 0) return Action::claim(e, "breaker-connected:(ii)(b)");
  if (EdgeId e = spread(i2, i1, false); e >= 0) return Action::claim(e, "breaker-connected:(ii)(c)");

  for (EdgeId e = 0; e < st.num_edges(); ++e)
    if (st.owner(e) == Owner::Unclaimed) return Action::claim(e, "breaker-connected:(ii)(d)");
  throw StateError("breaker_connected_move: no unclaimed edge");
}

// ---------------------------------------------------------------------------

bool CriticalReport::critical(Vertex v, int part) const {
  const auto& list = part == 1 ? critical_to_v1 : critical_to_v2;
  return std::binary_search(list.begin(), list.end(), v);
}

CriticalReport compute_critical(const GameState& st) {
  CriticalReport rep;
  const int size1 = st.part_size(1), size2 = st.part_size(2);
  for (Vertex v = 0; v < st.n(); ++v) {
    if (st.touched(v)) continue;
    if (size1 > 0 && st.blocker_degree(v, 1) == size1) rep.critical_to_v1.push_back(v);
    if (size2 > 0 && st.blocker_degree(v, 2) == size2) rep.critical_to_v2.push_back(v);
  }
  rep.part1_critical = !rep.critical_to_v1.empty();
  rep.part2_critical = !rep.critical_to_v2.empty();
  return rep;
}

Action client_connected_move(const GameState& st, std::span<const EdgeId> offer) {
  if (offer.empty()) throw StateError("client_connected_move: empty offer");
  std::vector<EdgeId> sorted(offer.begin(), offer.end());
  std::sort(sorted.begin(), sorted.end());

  for (EdgeId e : sorted)
    if (st.closes_odd_cycle(e)) return Action::choose(e, "client-connected:(i)");

  // (ii): after this round an unclaimed edge would sit inside a part.
  for (EdgeId e : sorted) {
    GameState next = st;
    apply_round(next, offer, e);
    if (next.in_progress() && !next.threat_edges().empty())
      return Action::choose(e, "client-connected:(ii)");
  }

  const CriticalReport crit = compute_critical(st);
  auto joins_r = [&](EdgeId e, int* part) {
    auto [a, b] = st.endpoints(e);
    if (st.touched(a) == st.touched(b)) return !st.touched(a) && (*part = 0, true);
    *part = st.touched(a) ? st.part(a) : st.part(b);
    return true;
  };
  for (EdgeId e : sorted) {
    int p = 0;
    if (joins_r(e, &p) && p != 0 && !(p == 1 ? crit.part1_critical : crit.part2_critical))
      return Action::choose(e, "client-connected:(iii)");
  }
  for (EdgeId e : sorted) {
    int p = 0;
    if (joins_r(e, &p)) return Action::choose(e, "client-connected:(iv)");
  }
  return Action::forfeit("every offered edge closes an even cycle", "client-connected:(v)");
}

// ---------------------------------------------------------------------------

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("uniform_index: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do x = rng();
  while (x > limit);
  return x % bound;
}

std::string RandomPlayer::name() const {
  return role_ == Role::Builder ? "random-builder" : "random-blocker";
}

Action RandomPlayer::act(const GameState& st, std::span<const EdgeId> offer) {
  const bool mb = st.config().variant == Variant::MakerBreaker;
  if (mb && role_ == Role::Builder) {
    auto legal = st.legal_builder_moves();
    if (legal.empty()) return Action::forfeit("no legal move");
    return Action::claim(legal[uniform_index(rng_, legal.size())]);
  }
  if (mb) {
    std::vector<EdgeId> free;
    for (EdgeId e = 0; e < st.num_edges(); ++e)
      if (st.owner(e) == Owner::Unclaimed) free.push_back(e);
    return Action::claim(free[uniform_index(rng_, free.size())]);
  }
  if (role_ == Role::Builder) return Action::choose(offer[uniform_index(rng_, offer.size())]);

  std::vector<EdgeId> pool = offerable_edges(st);
  if (st.config().rules == Rules::Connected && st.builder_edge_count() == 0) {
    // First connected round: a star around a random vertex.
    Vertex c = static_cast<Vertex>(uniform_index(rng_, st.n()));
    std::vector<EdgeId> star;
    for (Vertex x = 0; x < st.n(); ++x)
      if (x != c && st.owner(c, x) == Owner::Unclaimed) star.push_back(st.edge(c, x));
    if (!star.empty()) pool = std::move(star);
  }
  const std::size_t cap = std::min<std::size_t>(pool.size(), st.config().b + 1);
  const std::size_t size = 1 + uniform_index(rng_, cap);
  for (std::size_t i = 0; i < size; ++i)
    std::swap(pool[i], pool[i + uniform_index(rng_, pool.size() - i)]);
  pool.resize(size);
  return Action::make_offer(std::move(pool));
}

Action GreedyBreaker::act(const GameState& st, std::span<const EdgeId>) {
  if (!st.threat_edges().empty()) return Action::claim(lowest(st.threat_edges()), "greedy:threat");
  EdgeId best = -1;
  int best_score = -1;
  for (EdgeId e = 0; e < st.num_edges(); ++e) {
    if (st.owner(e) != Owner::Unclaimed) continue;
    auto [a, b] = st.endpoints(e);
    int score = st.builder_degree(a) + st.builder_degree(b);
    if (score > best_score) {
      best_score = score;
      best = e;
    }
  }
  return Action::claim(best, "greedy:adjacency");
}

Action GreedyMaker::act(const GameState& st, std::span<const EdgeId>) {
  if (!st.threat_edges().empty()) return Action::claim(lowest(st.threat_edges()), "greedy:win");
  EdgeId best = -1;
  int best_score = -1;
  for (EdgeId e = 0; e < st.num_edges(); ++e) {
    if (!st.is_legal_builder_move(e)) continue;
    auto [a, b] = st.endpoints(e);
    if (st.touched(a) == st.touched(b)) continue;
    Vertex fresh = st.touched(a) ? b : a;
    int side = 3 - st.part(st.touched(a) ? a : b);
    // Unclaimed edges from the fresh vertex into the part it would join.
    int score = st.part_size(side) - st.blocker_degree(fresh, side);
    if (score > best_score) {
      best_score = score;
      best = e;
    }
  }
  if (best >= 0) return Action::claim(best, "greedy:grow");
  for (EdgeId e = 0; e < st.num_edges(); ++e)
    if (st.is_legal_builder_move(e)) return Action::claim(e, "greedy:any");
  return Action::forfeit("no legal move", "greedy:none");
}

Action GreedyWaiter::act(const GameState& st, std::span<const EdgeId>) {
  const std::size_t cap = st.config().b + 1;
  std::vector<EdgeId> out;
  if (st.builder_edge_count() == 0) {
    for (Vertex x = 1; x < st.n() && out.size() < cap; ++x)
      if (st.owner(0, x) == Owner::Unclaimed) out.push_back(st.edge(0, x));
    if (!out.empty()) return Action::make_offer(std::move(out), "greedy:star");
  }
  const int larger = st.part_size(1) >= st.part_size(2) ? 1 : 2;
  for (int side : {larger, 3 - larger}) {
    if (st.part_size(side) == 0) continue;
    for (Vertex y = 0; y < st.n(); ++y) {
      if (st.touched(y)) continue;
      for (Vertex x = 0; x < st.n() && out.size() < cap; ++x)
        if (st.part(x) == side && st.owner(x, y) == Owner::Unclaimed) out.push_back(st.edge(x, y));
      if (!out.empty()) return Action::make_offer(std::move(out), "greedy:fresh-vertex");
    }
  }
  std::vector<EdgeId> pool = offerable_edges(st);
  std::stable_partition(pool.begin(), pool.end(), [&](EdgeId e) {
    auto [a, b] = st.endpoints(e);
    return st.part(a) != st.part(b) || !st.touched(a);
  });
  if (pool.size() > cap) pool.resize(cap);
  return Action::make_offer(std::move(pool), "greedy:rest");
}

}  // namespace oddcycle
