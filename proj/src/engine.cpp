#include "oddcycle/engine.hpp"

#include <algorithm>

#include "oddcycle/errors.hpp"

namespace oddcycle {

namespace {

std::string stamp(const GameConfig& c, const Move& m) {
  return "(s=" + std::to_string(m.s) + ", k=" + std::to_string(m.k) + ", " +
         std::string(role_name(c.variant, m.role)) + ")";
}

[[noreturn]] void rethrow_with_move(const RuleViolation& v, const GameConfig& c, const Move& m) {
  throw RuleViolation(v.rule(), std::string(v.what()) + " at move " + stamp(c, m));
}

void record(Transcript& t, const GameState& st, const Move& m, HookList hooks) {
  t.moves.push_back(m);
  for (Hook* h : hooks) h->after_move(st, m);
}

void close(Transcript& t, const GameState& st, HookList hooks) {
  t.result = GameResult{st.winner(), st.end_reason()};
  t.digest = st.digest();
  for (Hook* h : hooks) h->on_end(st, t);
}

}  // namespace

Transcript run_maker_breaker(const GameConfig& config, Strategy& maker, Strategy& breaker,
                             HookList hooks) {
  if (config.variant != Variant::MakerBreaker)
    throw ArgumentError("run_maker_breaker needs a Maker-Breaker config");
  GameState st(config);
  Transcript t;
  t.config = config;
  for (Hook* h : hooks) h->on_start(st);

  while (st.in_progress()) {
    if (!st.has_legal_builder_move()) {
      st.finish(Winner::Blocker, EndReason::NoLegalBuilderMove);
      break;
    }
    Move m{st.round() + 1, 0, Role::Builder, maker.act(st, {})};
    if (m.action.kind == ActionKind::Forfeit) {
      st.finish(Winner::Blocker, EndReason::BuilderForfeit);
      record(t, st, m, hooks);
      break;
    }
    try {
      if (m.action.kind != ActionKind::Claim)
        throw RuleViolation("action-kind", "Maker must claim an edge or forfeit");
      st.apply_claim(Role::Builder, m.action.edge);
    } catch (const RuleViolation& v) {
      rethrow_with_move(v, config, m);
    }
    record(t, st, m, hooks);

    const int claims = std::min(config.b, st.unclaimed_count());
    for (int j = 0; j < claims && st.in_progress(); ++j) {
      Move bm{st.round(), st.turn_index() + 1, Role::Blocker, breaker.act(st, {})};
      if (bm.action.kind == ActionKind::Forfeit) {
        st.finish(Winner::Builder, EndReason::BlockerForfeit);
        record(t, st, bm, hooks);
        break;
      }
      try {
        if (bm.action.kind != ActionKind::Claim)
          throw RuleViolation("action-kind", "Breaker must claim an edge or forfeit");
        st.apply_claim(Role::Blocker, bm.action.edge);
      } catch (const RuleViolation& v) {
        rethrow_with_move(v, config, bm);
      }
      record(t, st, bm, hooks);
    }
  }
  close(t, st, hooks);
  return t;
}

bool is_offerable(const GameState& st, EdgeId e) {
  if (st.owner(e) != Owner::Unclaimed) return false;
  if (st.config().rules == Rules::Free || st.builder_edge_count() == 0) return true;
  return st.touches_builder_graph(e);
}

std::vector<EdgeId> offerable_edges(const GameState& st) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < st.num_edges(); ++e)
    if (is_offerable(st, e)) out.push_back(e);
  return out;
}

std::vector<std::string> validate_offer(const GameState& st, std::span<const EdgeId> offer) {
  std::vector<std::string> bad;
  const int b = st.config().b;
  if (offer.empty() || static_cast<int>(offer.size()) > b + 1) bad.emplace_back("offer-size");

  std::vector<EdgeId> sorted(offer.begin(), offer.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    bad.emplace_back("offer-duplicate");

  bool in_range = true;
  for (EdgeId e : offer)
    if (e < 0 || e >= st.num_edges()) in_range = false;
  if (!in_range) {
    bad.emplace_back("offer-edge-out-of-range");
    return bad;
  }
  if (std::any_of(offer.begin(), offer.end(),
                  [&](EdgeId e) { return st.owner(e) != Owner::Unclaimed; }))
    bad.emplace_back("offer-claimed");

  if (st.config().rules == Rules::Connected && !offer.empty()) {
    if (st.builder_edge_count() == 0) {
      auto [u0, v0] = st.endpoints(offer.front());
      bool u_common = true, v_common = true;
      for (EdgeId e : offer) {
        auto [u, v] = st.endpoints(e);
        u_common = u_common && (u == u0 || v == u0);
        v_common = v_common && (u == v0 || v == v0);
      }
      if (!u_common && !v_common) bad.emplace_back("connected-first-round-common-vertex");
    } else if (std::any_of(offer.begin(), offer.end(),
                           [&](EdgeId e) { return !st.touches_builder_graph(e); })) {
      bad.emplace_back("connected-not-adjacent");
    }
  }
  return bad;
}

void apply_round(GameState& st, std::span<const EdgeId> offer, EdgeId choice) {
  st.apply_claim(Role::Builder, choice);
  for (EdgeId e : offer) {
    if (e == choice || !st.in_progress()) continue;
    st.apply_claim(Role::Blocker, e);
  }
}

Transcript run_client_waiter(const GameConfig& config, Strategy& waiter, Strategy& client,
                             HookList hooks) {
  if (config.variant != Variant::ClientWaiter)
    throw ArgumentError("run_client_waiter needs a Client-Waiter config");
  GameState st(config);
  Transcript t;
  t.config = config;
  for (Hook* h : hooks) h->on_start(st);

  while (st.in_progress()) {
    if (offerable_edges(st).empty()) {
      // Unclaimed edges remain (otherwise the board-exhausted rule fired),
      // but none touches Client's graph.
      st.finish(Winner::Builder, EndReason::NoOfferableEdges);
      break;
    }
    Move wm{st.round() + 1, 0, Role::Blocker, waiter.act(st, {})};
    if (wm.action.kind == ActionKind::Forfeit) {
      st.finish(Winner::Builder, EndReason::BlockerForfeit);
      record(t, st, wm, hooks);
      break;
    }
    try {
      if (wm.action.kind != ActionKind::Offer)
        throw RuleViolation("action-kind", "Waiter must offer edges");
      auto bad = validate_offer(st, wm.action.offer);
      if (!bad.empty()) throw RuleViolation(bad.front(), "invalid offer");
    } catch (const RuleViolation& v) {
      rethrow_with_move(v, config, wm);
    }
    record(t, st, wm, hooks);

    const std::vector<EdgeId>& offer = t.moves.back().action.offer;
    Move cm{st.round() + 1, 1, Role::Builder, client.act(st, offer)};
    if (cm.action.kind == ActionKind::Forfeit) {
      st.finish(Winner::Blocker, EndReason::BuilderForfeit);
      record(t, st, cm, hooks);
      break;
    }
    try {
      if (cm.action.kind != ActionKind::Choose)
        throw RuleViolation("action-kind", "Client must choose an offered edge or forfeit");
      if (std::find(offer.begin(), offer.end(), cm.action.edge) == offer.end())
        throw RuleViolation("choice-not-in-offer",
                            "edge " + std::to_string(cm.action.edge) + " was not offered");
      apply_round(st, offer, cm.action.edge);
    } catch (const RuleViolation& v) {
      rethrow_with_move(v, config, cm);
    }
    record(t, st, cm, hooks);
  }
  close(t, st, hooks);
  return t;
}

Transcript run_game(const GameConfig& config, Strategy& builder, Strategy& blocker,
                    HookList hooks) {
  return config.variant == Variant::MakerBreaker
             ? run_maker_breaker(config, builder, blocker, hooks)
             : run_client_waiter(config, blocker, builder, hooks);
}

GameState replay(const Transcript& t) {
  GameState st(t.config);
  const bool mb = t.config.variant == Variant::MakerBreaker;
  const std::vector<EdgeId>* pending = nullptr;
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    const Move& m = t.moves[i];
    auto fail = [&](const std::string& why) -> void {
      throw CorruptionError("move " + std::to_string(i) + " " + stamp(t.config, m) + ": " + why);
    };
    if (!st.in_progress()) fail("move after the game ended");
    int want_s, want_k;
    if (mb) {
      want_s = m.role == Role::Builder ? st.round() + 1 : st.round();
      want_k = m.role == Role::Builder ? 0 : st.turn_index() + 1;
      if (m.role == Role::Blocker &&
          (st.round() == 0 || st.turn_index() >= t.config.b))
        fail("Breaker move out of turn");
      if (m.role == Role::Builder && st.round() > 0 &&
          st.turn_index() < std::min(t.config.b, st.turn_index() + st.unclaimed_count()))
        fail("Maker move before Breaker finished his turn");
    } else {
      want_s = st.round() + 1;
      want_k = m.role == Role::Blocker ? 0 : 1;
      if ((m.role == Role::Builder) != (pending != nullptr)) fail("turn order broken");
    }
    if (m.s != want_s || m.k != want_k) fail("unexpected (s, k) stamp");

    try {
      switch (m.action.kind) {
        case ActionKind::Forfeit:
          st.finish(m.role == Role::Builder ? Winner::Blocker : Winner::Builder,
                    m.role == Role::Builder ? EndReason::BuilderForfeit
                                            : EndReason::BlockerForfeit);
          break;
        case ActionKind::Claim:
          if (!mb) fail("claim action in Client-Waiter");
          st.apply_claim(m.role, m.action.edge);
          break;
        case ActionKind::Offer: {
          if (mb) fail("offer action in Maker-Breaker");
          auto bad = validate_offer(st, m.action.offer);
          if (!bad.empty()) fail("invalid offer: " + bad.front());
          pending = &m.action.offer;
          break;
        }
        case ActionKind::Choose:
          if (mb || !pending) fail("choice without offer");
          if (std::find(pending->begin(), pending->end(), m.action.edge) == pending->end())
            fail("choice not in offer");
          apply_round(st, *pending, m.action.edge);
          pending = nullptr;
          break;
      }
    } catch (const RuleViolation& v) {
      fail(v.what());
    } catch (const ArgumentError& v) {
      fail(v.what());
    }
  }
  if (pending) throw CorruptionError("transcript ends with an unanswered offer");

  if (t.result && st.in_progress()) {
    const GameResult& r = *t.result;
    if (r.reason == EndReason::NoLegalBuilderMove && mb && !st.has_legal_builder_move()) {
      st.finish(Winner::Blocker, r.reason);
    } else if (r.reason == EndReason::NoOfferableEdges && !mb && offerable_edges(st).empty()) {
      st.finish(Winner::Builder, r.reason);
    } else {
      throw CorruptionError("recorded result does not follow from the moves");
    }
  }
  if (t.result && !(GameResult{st.winner(), st.end_reason()} == *t.result))
    throw CorruptionError("recorded result " + std::string(to_string(t.result->reason)) +
                          " differs from replayed " + std::string(to_string(st.end_reason())));
  if (st.digest() != t.digest)
    throw CorruptionError("digest mismatch: recorded " + t.digest + ", replayed " + st.digest());
  return st;
}

}  // namespace oddcycle
