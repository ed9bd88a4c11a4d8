#include "oddcycle/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "oddcycle/errors.hpp"
#include "oddcycle/strategies.hpp"

namespace oddcycle {

Capacity parse_capacity(const std::string& text, Capacity base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ArgumentError("capacity override: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    long long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw ArgumentError("capacity override: bad number '" + val + "' for " + key);
    }
    if (v <= 0) throw ArgumentError("capacity override: " + key + " must be positive");
    if (key == "mb_n") base.mb_n = static_cast<int>(v);
    else if (key == "cw_n") base.cw_n = static_cast<int>(v);
    else if (key == "verify_nodes") base.verify_nodes = v;
    else throw ArgumentError("capacity override: unknown key '" + key + "'");
  }
  return base;
}

Capacity capacity_from_env() {
  const char* s = std::getenv("ODDCYCLE_CAPACITY_OVERRIDE");
  return s ? parse_capacity(s) : Capacity{};
}

namespace {

using Mask = std::uint32_t;

// K_n with edges as bits of a 32-bit mask.
struct Board {
  int n = 0;
  int m = 0;
  Mask all = 0;
  std::vector<std::pair<int, int>> ends;
  std::vector<Mask> incident;  // edges at vertex v
  std::vector<std::vector<std::uint8_t>> perms;  // edge maps, filled on demand

  explicit Board(int n_) : n(n_), m(edge_count(n_)), incident(n_, 0) {
    for (EdgeId e = 0; e < m; ++e) {
      ends.push_back(edge_endpoints(e, n));
      incident[ends[e].first] |= Mask(1) << e;
      incident[ends[e].second] |= Mask(1) << e;
    }
    all = m == 32 ? ~Mask(0) : (Mask(1) << m) - 1;
  }

  Mask touched_edges(Mask g) const {
    Mask out = 0;
    for (int v = 0; v < n; ++v)
      if (g & incident[v]) out |= incident[v];
    return out;
  }

  bool closes_odd(Mask g, int e) const {
    int adj[kSolverMaxN] = {};
    for (Mask x = g; x; x &= x - 1) {
      auto [a, b] = ends[std::countr_zero(x)];
      adj[a] |= 1 << b;
      adj[b] |= 1 << a;
    }
    auto [u, v] = ends[e];
    int colour[kSolverMaxN];
    std::fill(colour, colour + n, -1);
    colour[u] = 0;
    int stack[kSolverMaxN], top = 0;
    stack[top++] = u;
    while (top) {
      int x = stack[--top];
      for (int nb = adj[x]; nb; nb &= nb - 1) {
        int y = std::countr_zero(static_cast<unsigned>(nb));
        if (colour[y] < 0) {
          colour[y] = colour[x] ^ 1;
          stack[top++] = y;
        }
      }
    }
    return colour[v] >= 0 && colour[v] == colour[u];
  }

  std::uint64_t pack(Mask b, Mask w) const {
    std::uint64_t k = 0;
    for (int e = 0; e < m; ++e) {
      std::uint64_t o = (b >> e & 1) ? 1 : (w >> e & 1) ? 2 : 0;
      k |= o << (2 * e);
    }
    return k;
  }

  void build_perms() {
    if (!perms.empty()) return;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<std::uint8_t> map(m);
      for (int e = 0; e < m; ++e) map[e] = edge_between(p[ends[e].first], p[ends[e].second], n);
      perms.push_back(std::move(map));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::uint64_t canonical(Mask b, Mask w) const {
    std::uint64_t best = ~std::uint64_t(0);
    for (const auto& map : perms) {
      std::uint64_t k = 0;
      for (int e = 0; e < m; ++e) {
        std::uint64_t o = (b >> e & 1) ? 1 : (w >> e & 1) ? 2 : 0;
        k |= o << (2 * map[e]);
      }
      best = std::min(best, k);
    }
    return best;
  }
};

std::pair<Mask, Mask> masks_of(const GameState& st) {
  Mask b = 0, w = 0;
  for (EdgeId e = 0; e < st.num_edges(); ++e) {
    if (st.owner(e) == Owner::Builder) b |= Mask(1) << e;
    if (st.owner(e) == Owner::Blocker) w |= Mask(1) << e;
  }
  return {b, w};
}

void check_solver_size(const GameConfig& c, const SolverOptions& o) {
  c.validate();
  const int guard = c.variant == Variant::MakerBreaker ? o.capacity.mb_n : o.capacity.cw_n;
  const int limit = o.canonical ? kSolverMaxN : std::min(guard, kSolverMaxN);
  if (c.n > limit)
    throw CapacityError("solver: n=" + std::to_string(c.n) + " exceeds the guard " +
                        std::to_string(limit) + " for " + std::string(to_string(c.variant)) +
                        (o.canonical ? "" : " (enable canonicalization or raise "
                                            "ODDCYCLE_CAPACITY_OVERRIDE)"));
}

}  // namespace

struct ExactSolver::Impl {
  GameConfig config;
  SolverOptions options;
  Board board;
  std::unordered_map<std::uint64_t, bool> memo;
  long long nodes = 0;

  Impl(const GameConfig& c, const SolverOptions& o) : config(c), options(o), board(c.n) {
    if (options.canonical) board.build_perms();
  }

  std::uint64_t key(Mask b, Mask w) const {
    return options.canonical ? board.canonical(b, w) : board.pack(b, w);
  }

  void count() {
    ++nodes;
    if (options.node_cap > 0 && nodes > options.node_cap)
      throw CapacityError("solver: node cap " + std::to_string(options.node_cap) + " exceeded",
                          nodes);
  }

  Mask builder_legal(Mask b, Mask w) const {
    Mask free = board.all & ~(b | w);
    if (config.rules == Rules::Connected && b) free &= board.touched_edges(b);
    return free;
  }

  template <class F>
  bool memoised(Mask b, Mask w, F compute) {
    if (!options.memo) {
      count();
      return compute();
    }
    const std::uint64_t k = key(b, w);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    count();
    bool v = compute();
    memo.emplace(k, v);
    return v;
  }

  // Maker-Breaker, builder value. Whose turn it is follows from the counts.
  bool mb(Mask b, Mask w) {
    return memoised(b, w, [&] {
      const Mask free = board.all & ~(b | w);
      if (!free) return false;
      const int made = std::popcount(b), blocked = std::popcount(w);
      if (blocked == config.b * made) {
        const Mask legal = builder_legal(b, w);
        for (Mask x = legal; x; x &= x - 1)
          if (board.closes_odd(b, std::countr_zero(x))) return true;
        for (Mask x = legal; x; x &= x - 1)
          if (mb(b | (x & -x), w)) return true;
        return false;
      }
      for (Mask x = free; x; x &= x - 1)
        if (!mb(b, w | (x & -x))) return false;
      return true;
    });
  }

  Mask offerable(Mask b, Mask w) const {
    Mask free = board.all & ~(b | w);
    if (config.rules == Rules::Connected && b) free &= board.touched_edges(b);
    return free;
  }

  // Calls f(offer) for each legal offer until f returns true; returns whether it did.
  template <class F>
  bool for_each_offer(Mask b, Mask w, F f) const {
    const Mask pool = offerable(b, w);
    std::vector<int> bits;
    for (Mask x = pool; x; x &= x - 1) bits.push_back(std::countr_zero(x));
    const int cap = std::min<int>(config.b + 1, static_cast<int>(bits.size()));
    const bool star = config.rules == Rules::Connected && !b;
    // Combinations of each size in lexicographic order.
    for (int size = 1; size <= cap; ++size) {
      std::vector<int> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        Mask offer = 0;
        int common = (1 << board.n) - 1;
        for (int i : idx) {
          offer |= Mask(1) << bits[i];
          auto [u, v] = board.ends[bits[i]];
          common &= (1 << u) | (1 << v);
        }
        if ((!star || common) && f(offer)) return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == static_cast<int>(bits.size()) - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return false;
  }

  bool after_choice(Mask b, Mask w, Mask offer, int choice) {
    if (board.closes_odd(b, choice)) return true;
    return cw(b | (Mask(1) << choice), w | (offer & ~(Mask(1) << choice)));
  }

  // Client-Waiter at a round boundary, builder value.
  bool cw(Mask b, Mask w) {
    return memoised(b, w, [&] {
      if (!(board.all & ~(b | w))) return false;
      if (!offerable(b, w)) return true;
      const bool waiter_wins = for_each_offer(b, w, [&](Mask offer) {
        for (Mask x = offer; x; x &= x - 1)
          if (after_choice(b, w, offer, std::countr_zero(x))) return false;
        return true;
      });
      return !waiter_wins;
    });
  }

  bool value(Mask b, Mask w) {
    return config.variant == Variant::MakerBreaker ? mb(b, w) : cw(b, w);
  }
};

ExactSolver::ExactSolver(const GameConfig& config, SolverOptions options) {
  check_solver_size(config, options);
  impl_ = std::make_unique<Impl>(config, options);
}
ExactSolver::~ExactSolver() = default;
ExactSolver::ExactSolver(ExactSolver&&) noexcept = default;
ExactSolver& ExactSolver::operator=(ExactSolver&&) noexcept = default;

Winner ExactSolver::solve() { return impl_->value(0, 0) ? Winner::Builder : Winner::Blocker; }

bool ExactSolver::builder_wins(const GameState& st) {
  if (!st.in_progress()) return st.winner() == Winner::Builder;
  if (st.config().variant == Variant::MakerBreaker && !st.has_legal_builder_move() &&
      st.turn_index() == st.config().b)
    return false;
  auto [b, w] = masks_of(st);
  return impl_->value(b, w);
}

bool ExactSolver::builder_wins_after(const GameState& st, std::span<const EdgeId> offer,
                                     EdgeId choice) {
  auto [b, w] = masks_of(st);
  Mask o = 0;
  for (EdgeId e : offer) o |= Mask(1) << e;
  return impl_->after_choice(b, w, o, choice);
}

std::vector<std::vector<EdgeId>> ExactSolver::legal_offers(const GameState& st) const {
  auto [b, w] = masks_of(st);
  std::vector<std::vector<EdgeId>> out;
  impl_->for_each_offer(b, w, [&](Mask offer) {
    std::vector<EdgeId> o;
    for (Mask x = offer; x; x &= x - 1) o.push_back(std::countr_zero(x));
    out.push_back(std::move(o));
    return false;
  });
  return out;
}

long long ExactSolver::nodes() const { return impl_->nodes; }
std::size_t ExactSolver::memo_size() const { return impl_->memo.size(); }

SolveResult solve_mb(const GameConfig& config, const SolverOptions& options) {
  if (config.variant != Variant::MakerBreaker) throw ArgumentError("solve_mb needs Maker-Breaker");
  ExactSolver s(config, options);
  Winner w = s.solve();
  return {w, s.nodes()};
}

SolveResult solve_cw(const GameConfig& config, const SolverOptions& options) {
  if (config.variant != Variant::ClientWaiter) throw ArgumentError("solve_cw needs Client-Waiter");
  ExactSolver s(config, options);
  Winner w = s.solve();
  return {w, s.nodes()};
}

SolveResult solve_game(const GameConfig& config, const SolverOptions& options) {
  return config.variant == Variant::MakerBreaker ? solve_mb(config, options)
                                                 : solve_cw(config, options);
}

int exact_threshold(int n, Variant variant, Rules rules, const SolverOptions& options) {
  GameConfig c{n, variant == Variant::MakerBreaker ? 1 : 0, variant, rules, 0};
  for (; c.b <= edge_count(n); ++c.b)
    if (solve_game(c, options).winner == Winner::Blocker) return c.b;
  throw StateError("exact_threshold: builder wins at every bias, which is impossible");
}

// ---------------------------------------------------------------------------
// Strategy verification.

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// Replays a fixed list of opponent decisions.
class Scripted : public Strategy {
 public:
  explicit Scripted(std::vector<Action> script) : script_(std::move(script)) {}
  std::string name() const override { return "scripted"; }
  Action act(const GameState&, std::span<const EdgeId>) override {
    if (next_ >= script_.size()) throw StateError("scripted opponent ran out of moves");
    return script_[next_++];
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<Scripted>(*this); }

 private:
  std::vector<Action> script_;
  std::size_t next_ = 0;
};

struct Verifier {
  GameConfig config;
  Role role;
  HookList hooks;
  bool memo;
  long long cap;
  Board board;
  std::unordered_map<std::string, int> table;
  long long nodes = 0;
  int max_depth = 0;
  std::unique_ptr<ExactSolver> offers;  // for Client-Waiter offer enumeration

  Winner fixed_winner() const { return role == Role::Builder ? Winner::Builder : Winner::Blocker; }

  std::string key(const GameState& st, const Strategy& s) const {
    auto [b, w] = masks_of(st);
    std::uint64_t k = board.pack(b, w);
    std::vector<int> sig;
    s.signature(sig);
    std::string out(reinterpret_cast<const char*>(&k), sizeof k);
    out.append(reinterpret_cast<const char*>(sig.data()), sig.size() * sizeof(int));
    return out;
  }

  void notify(const GameState& st, const Move& m) {
    for (Hook* h : hooks) h->after_move(st, m);
  }

  bool mb_builder_turn(const GameState& st) const {
    return st.builder_edge_count() == 0 || st.turn_index() == config.b;
  }

  // Successors of `st`: the fixed side's single move (MB) or round (CW), or
  // one entry per opponent option.
  struct Step {
    std::optional<GameState> child;
    std::unique_ptr<Strategy> fixed;  // null when unchanged
    std::optional<Action> decision;   // opponent decision that led here, if any
  };

  std::vector<Step> successors(const GameState& st, const Strategy& fixed) {
    std::vector<Step> out;
    auto apply = [&](GameState s, Role r, EdgeId e) {
      s.apply_claim(r, e);
      return s;
    };
    if (config.variant == Variant::MakerBreaker) {
      const bool builder_turn = mb_builder_turn(st);
      const Role mover = builder_turn ? Role::Builder : Role::Blocker;
      Move m{builder_turn ? st.round() + 1 : st.round(), builder_turn ? 0 : st.turn_index() + 1,
             mover, {}};
      if (mover == role) {
        auto s2 = fixed.clone();
        m.action = s2->act(st, {});
        if (m.action.kind == ActionKind::Forfeit) {
          GameState end = st;
          end.finish(role == Role::Builder ? Winner::Blocker : Winner::Builder,
                     role == Role::Builder ? EndReason::BuilderForfeit : EndReason::BlockerForfeit);
          notify(end, m);
          out.push_back({std::move(end), std::move(s2), {}});
          return out;
        }
        if (m.action.kind != ActionKind::Claim)
          throw RuleViolation("action-kind", fixed.name() + " must claim or forfeit");
        GameState child = apply(st, mover, m.action.edge);
        notify(child, m);
        out.push_back({std::move(child), std::move(s2), {}});
        return out;
      }
      for (EdgeId e = 0; e < st.num_edges(); ++e) {
        if (st.owner(e) != Owner::Unclaimed) continue;
        if (mover == Role::Builder && !st.is_legal_builder_move(e)) continue;
        m.action = Action::claim(e);
        GameState child = apply(st, mover, e);
        notify(child, m);
        out.push_back({std::move(child), nullptr, m.action});
      }
      return out;
    }

    Move wm{st.round() + 1, 0, Role::Blocker, {}};
    Move cm{st.round() + 1, 1, Role::Builder, {}};
    auto play_choice = [&](const std::vector<EdgeId>& offer, Strategy& client, Action* decision) {
      cm.action = client.act(st, offer);
      if (cm.action.kind == ActionKind::Forfeit) {
        GameState end = st;
        end.finish(Winner::Blocker, EndReason::BuilderForfeit);
        notify(end, cm);
        return end;
      }
      if (cm.action.kind != ActionKind::Choose ||
          std::find(offer.begin(), offer.end(), cm.action.edge) == offer.end())
        throw RuleViolation("choice-not-in-offer", client.name() + " chose outside the offer");
      GameState child = st;
      apply_round(child, offer, cm.action.edge);
      notify(child, cm);
      if (decision) *decision = cm.action;
      return child;
    };
    if (role == Role::Builder) {
      for (auto& offer : offers->legal_offers(st)) {
        wm.action = Action::make_offer(offer);
        notify(st, wm);
        auto s2 = fixed.clone();
        GameState child = play_choice(offer, *s2, nullptr);
        out.push_back({std::move(child), std::move(s2), wm.action});
      }
      return out;
    }
    auto s2 = fixed.clone();
    wm.action = s2->act(st, {});
    if (wm.action.kind == ActionKind::Forfeit) {
      GameState end = st;
      end.finish(Winner::Builder, EndReason::BlockerForfeit);
      notify(end, wm);
      out.push_back({std::move(end), std::move(s2), {}});
      return out;
    }
    auto bad = validate_offer(st, wm.action.offer);
    if (wm.action.kind != ActionKind::Offer || !bad.empty())
      throw RuleViolation(bad.empty() ? "action-kind" : bad.front(), fixed.name() + " made an invalid offer");
    notify(st, wm);
    std::shared_ptr<Strategy> shared(std::move(s2));
    for (EdgeId e : wm.action.offer) {
      cm.action = Action::choose(e);
      GameState child = st;
      apply_round(child, wm.action.offer, e);
      notify(child, cm);
      out.push_back({std::move(child), shared->clone(), cm.action});
    }
    return out;
  }

  bool terminal(const GameState& st, int* value) {
    if (!st.in_progress()) {
      *value = st.winner() == fixed_winner() ? kInf : 0;
      return true;
    }
    if (config.variant == Variant::MakerBreaker && mb_builder_turn(st) && !st.has_legal_builder_move()) {
      *value = role == Role::Blocker ? kInf : 0;
      return true;
    }
    if (config.variant == Variant::ClientWaiter && offerable_edges(st).empty()) {
      *value = role == Role::Builder ? kInf : 0;
      return true;
    }
    return false;
  }

  // Fewest further steps to a loss of the fixed side; kInf if none.
  int explore(const GameState& st, const Strategy& fixed, int depth) {
    max_depth = std::max(max_depth, depth);
    int v;
    if (terminal(st, &v)) return v;
    std::string k;
    if (memo) {
      k = key(st, fixed);
      if (auto it = table.find(k); it != table.end()) return it->second;
    }
    if (++nodes > cap)
      throw CapacityError("verify_strategy: node cap " + std::to_string(cap) + " exceeded", nodes);
    int best = kInf;
    for (auto& step : successors(st, fixed)) {
      const Strategy& next = step.fixed ? *step.fixed : fixed;
      int r = explore(*step.child, next, depth + 1);
      if (r < kInf) best = std::min(best, r + 1);
    }
    if (memo) table.emplace(std::move(k), best);
    return best;
  }

  // Opponent decisions along a shortest losing line.
  std::vector<Action> losing_line(const GameState& root, const Strategy& fixed, int target) {
    std::vector<Action> script;
    GameState st = root;
    std::unique_ptr<Strategy> cur = fixed.clone();
    int want = target;
    int v;
    while (!terminal(st, &v)) {
      bool moved = false;
      for (auto& step : successors(st, *cur)) {
        const Strategy& next = step.fixed ? *step.fixed : *cur;
        if (explore(*step.child, next, 0) + 1 != want) continue;
        if (step.decision) script.push_back(*step.decision);
        st = *step.child;
        if (step.fixed) cur = std::move(step.fixed);
        --want;
        moved = true;
        break;
      }
      if (!moved) throw StateError("verify_strategy: could not rebuild the losing line");
    }
    return script;
  }
};

}  // namespace

VerificationResult verify_strategy(const GameConfig& config, const Strategy& fixed, Role role,
                                   HookList hooks, const VerifyOptions& options) {
  config.validate();
  if (config.n > kSolverMaxN)
    throw CapacityError("verify_strategy: n=" + std::to_string(config.n) + " exceeds " +
                        std::to_string(kSolverMaxN));
  Verifier v{config,
             role,
             hooks,
             options.memo,
             options.node_cap > 0 ? options.node_cap : options.capacity.verify_nodes,
             Board(config.n),
             {},
             0,
             0,
             nullptr};
  if (config.variant == Variant::ClientWaiter) {
    SolverOptions so;
    so.capacity.cw_n = kSolverMaxN;
    v.offers = std::make_unique<ExactSolver>(config, so);
  }
  GameState root(config);
  VerificationResult res;
  int d = v.explore(root, fixed, 0);
  res.nodes = v.nodes;
  res.max_depth = v.max_depth;
  if (d >= kInf) return res;

  res.verdict = Verdict::Counterexample;
  // Rebuild without hooks so they do not see the replayed line twice.
  Verifier quiet = std::move(v);
  quiet.hooks = {};
  std::vector<Action> script = quiet.losing_line(root, fixed, d);
  auto mine = fixed.clone();
  Scripted opp(std::move(script));
  Transcript t = role == Role::Builder ? run_game(config, *mine, opp) : run_game(config, opp, *mine);
  const Winner lost_to = role == Role::Builder ? Winner::Blocker : Winner::Builder;
  if (!t.result || t.result->winner != lost_to)
    throw StateError("verify_strategy: rebuilt counterexample does not lose");
  res.counterexample = std::move(t);
  return res;
}

// ---------------------------------------------------------------------------

SolverOracle::SolverOracle(const GameConfig& config, Role role)
    : role_(role), solver_(std::make_shared<ExactSolver>(config)) {}

std::unique_ptr<Strategy> SolverOracle::clone() const {
  return std::make_unique<SolverOracle>(*this);
}

Action SolverOracle::act(const GameState& st, std::span<const EdgeId> offer) {
  const auto& c = st.config();
  if (c.variant == Variant::MakerBreaker) {
    if (role_ == Role::Builder) {
      auto legal = st.legal_builder_moves();
      if (legal.empty()) return Action::forfeit("no legal move", "solver-oracle");
      for (EdgeId e : legal) {
        GameState next = st;
        next.apply_claim(Role::Builder, e);
        if (solver_->builder_wins(next)) return Action::claim(e, "solver-oracle:win");
      }
      return Action::claim(legal.front(), "solver-oracle:lost");
    }
    EdgeId first = -1;
    for (EdgeId e = 0; e < st.num_edges(); ++e) {
      if (st.owner(e) != Owner::Unclaimed) continue;
      if (first < 0) first = e;
      GameState next = st;
      next.apply_claim(Role::Blocker, e);
      if (!solver_->builder_wins(next)) return Action::claim(e, "solver-oracle:win");
    }
    return Action::claim(first, "solver-oracle:lost");
  }
  if (role_ == Role::Builder) {
    std::vector<EdgeId> sorted(offer.begin(), offer.end());
    std::sort(sorted.begin(), sorted.end());
    for (EdgeId e : sorted)
      if (solver_->builder_wins_after(st, offer, e)) return Action::choose(e, "solver-oracle:win");
    return Action::choose(sorted.front(), "solver-oracle:lost");
  }
  auto offers = solver_->legal_offers(st);
  for (const auto& o : offers) {
    bool client_escapes = false;
    for (EdgeId e : o)
      if (solver_->builder_wins_after(st, o, e)) client_escapes = true;
    if (!client_escapes) return Action::make_offer(o, "solver-oracle:win");
  }
  return Action::make_offer(offers.front(), "solver-oracle:lost");
}

// ---------------------------------------------------------------------------

nlohmann::json solver_fixtures(const SolverOptions& options) {
  nlohmann::json thresholds = nlohmann::json::array(), values = nlohmann::json::array();
  struct Family {
    Variant v;
    Rules r;
    int lo, hi;
  };
  const Family families[] = {{Variant::MakerBreaker, Rules::Free, 3, 6},
                             {Variant::MakerBreaker, Rules::Connected, 3, 6},
                             {Variant::ClientWaiter, Rules::Connected, 3, 5}};
  for (const Family& f : families) {
    for (int n = f.lo; n <= f.hi; ++n) {
      GameConfig c{n, f.v == Variant::MakerBreaker ? 1 : 0, f.v, f.r, 0};
      int threshold = -1;
      for (; threshold < 0; ++c.b) {
        Winner w = solve_game(c, options).winner;
        values.push_back({{"variant", to_string(f.v)},
                          {"rules", to_string(f.r)},
                          {"n", n},
                          {"b", c.b},
                          {"winner", to_string(w)}});
        if (w == Winner::Blocker) threshold = c.b;
      }
      thresholds.push_back({{"variant", to_string(f.v)},
                            {"rules", to_string(f.r)},
                            {"n", n},
                            {"threshold", threshold}});
    }
  }
  nlohmann::json verifications = nlohmann::json::array();
  auto record = [&](const GameConfig& c, const Strategy& fixed) {
    const VerificationResult r = verify_strategy(c, fixed, Role::Builder);
    verifications.push_back(
        {{"strategy", fixed.name()},
         {"variant", to_string(c.variant)},
         {"rules", to_string(c.rules)},
         {"n", c.n},
         {"b", c.b},
         {"verdict", r.verdict == Verdict::WinsAgainstAll ? "wins-against-all" : "counterexample"},
         {"nodes", r.nodes}});
  };
  for (int n = 4; n <= 7; ++n)
    record({n, 1, Variant::MakerBreaker, Rules::Free, 0}, MakerOddCycle());
  for (int n = 4; n <= 5; ++n)
    record({n, (n + 1) / 2 - 2, Variant::ClientWaiter, Rules::Connected, 0}, ClientConnected());
  return {{"solver_version", kSolverVersion},
          {"thresholds", thresholds},
          {"values", values},
          {"verifications", verifications}};
}

std::string dump_fixtures(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace oddcycle
