#include "oddcycle/tournament.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "oddcycle/errors.hpp"
#include "oddcycle/optimizer.hpp"

namespace oddcycle {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct GameOutcome {
  GameResult result;
  int rounds = 0;
  std::string forfeit_reason;
  std::vector<Violation> violations;
  std::vector<MetricsSnapshot> metrics;
  std::optional<Transcript> transcript;
  std::exception_ptr error;
};

GameOutcome play_one(const TournamentConfig& tc, int p, int i) {
  GameOutcome out;
  GameConfig c = tc.base;
  c.seed = game_seed(tc.base.seed, p, i);
  try {
    GameRun run = play_game(c, tc.pairings[p], tc);
    const Transcript& t = run.transcript;
    out.result = *t.result;
    out.rounds = t.final_round();
    if (!t.moves.empty() && t.moves.back().action.kind == ActionKind::Forfeit)
      out.forfeit_reason = std::string(role_name(c.variant, t.moves.back().role)) + ": " +
                           t.moves.back().action.reason;
    out.violations = std::move(run.violations);
    out.metrics = std::move(run.metrics);
    if (tc.keep_transcripts) out.transcript = std::move(run.transcript);
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

void validate(const TournamentConfig& tc) {
  tc.base.validate();
  if (tc.games < 0) throw ArgumentError("tournament: games must be >= 0");
  if (tc.pairings.empty()) throw ArgumentError("tournament: no pairings");
  for (const Pairing& p : tc.pairings) {
    if (strategy_role(p.builder, tc.base.variant) != Role::Builder)
      throw ArgumentError("tournament: '" + p.builder + "' is not a builder strategy");
    if (strategy_role(p.blocker, tc.base.variant) != Role::Blocker)
      throw ArgumentError("tournament: '" + p.blocker + "' is not a blocker strategy");
  }
}

TournamentReport collect(const TournamentConfig& tc, std::vector<GameOutcome>& games) {
  TournamentReport rep;
  for (std::size_t p = 0; p < tc.pairings.size(); ++p) {
    PairingReport pr;
    pr.pairing = tc.pairings[p];
    rep.pairings.push_back(pr);
  }
  for (std::size_t g = 0; g < games.size(); ++g) {
    GameOutcome& o = games[g];
    if (o.error) std::rethrow_exception(o.error);
    PairingReport& pr = rep.pairings[g / tc.games];
    ++pr.games;
    (o.result.winner == Winner::Builder ? pr.builder_wins : pr.blocker_wins) += 1;
    pr.total_rounds += o.rounds;
    pr.violations += static_cast<long long>(o.violations.size());
    ++pr.end_reasons[std::string(to_string(o.result.reason))];
    if (!o.forfeit_reason.empty()) ++pr.forfeit_reasons[o.forfeit_reason];
    for (const MetricsSnapshot& m : o.metrics) {
      RoundMetrics& r = pr.metrics[m.s];
      ++r.samples;
      r.d += boost::rational_cast<double>(m.d);
      r.d1 += boost::rational_cast<double>(m.d1);
      r.d2 += boost::rational_cast<double>(m.d2);
      r.saved += static_cast<double>(m.saved);
    }
    for (Violation& v : o.violations) rep.violations.push_back(std::move(v));
    if (o.transcript) rep.transcripts.push_back(std::move(*o.transcript));
  }
  return rep;
}

}  // namespace

GameRun play_game(const GameConfig& c, const Pairing& pairing, const TournamentConfig& tc) {
  const int n = c.n, b = c.b;
  auto builder = make_strategy(pairing.builder, c, Role::Builder);
  auto blocker = make_strategy(pairing.blocker, c, Role::Blocker);

  ViolationLog log(tc.assert_mode);
  std::vector<std::unique_ptr<Hook>> owned;
  if (tc.invariant_hooks) {
    const bool mb = c.variant == Variant::MakerBreaker;
    if (mb && c.rules == Rules::Connected && pairing.blocker == "breaker-connected") {
      owned.push_back(std::make_unique<DegreeRegularityHook>(log));
      const int large_b = static_cast<int>(std::ceil((1 - tc.eps) * n / 2 - 1e-9));
      if (n >= 34 && b >= large_b)
        owned.push_back(std::make_unique<BreakerLossHook>(log, saved_edge_bound(n, tc.eps)));
    }
    if (mb && pairing.builder == "maker-oc")
      owned.push_back(
          std::make_unique<MakerLossHook>(log, dynamic_cast<const MakerOddCycle&>(*builder)));
    if (!mb && c.rules == Rules::Connected && pairing.builder == "client-connected" &&
        b <= (n + 1) / 2 - 2)
      owned.push_back(std::make_unique<ClientLemmaHook>(log));
  }
  if (tc.extra_hook) owned.push_back(tc.extra_hook(log));
  MetricsHook* metrics = nullptr;
  if (tc.metrics) {
    auto m = std::make_unique<MetricsHook>(false);
    metrics = m.get();
    owned.push_back(std::move(m));
  }
  std::vector<Hook*> hooks;
  for (auto& h : owned) hooks.push_back(h.get());

  GameRun run;
  run.transcript = run_game(c, *builder, *blocker, hooks);
  run.violations = log.violations();
  if (metrics) run.metrics = metrics->snapshots();
  return run;
}

std::uint64_t game_seed(std::uint64_t base, int pairing, int index) {
  return splitmix(splitmix(base) ^ (static_cast<std::uint64_t>(pairing) << 32 |
                                    static_cast<std::uint32_t>(index)));
}

long long TournamentReport::total_violations() const {
  long long n = 0;
  for (const auto& p : pairings) n += p.violations;
  return n;
}

TournamentReport run_tournament_serial(const TournamentConfig& tc) {
  validate(tc);
  const int total = static_cast<int>(tc.pairings.size()) * tc.games;
  std::vector<GameOutcome> games;
  for (int g = 0; g < total; ++g) {
    games.push_back(play_one(tc, g / tc.games, g % tc.games));
    if (games.back().error) break;
  }
  return collect(tc, games);
}

TournamentReport run_tournament(const TournamentConfig& tc) {
  validate(tc);
  const int total = static_cast<int>(tc.pairings.size()) * tc.games;
  std::vector<GameOutcome> games(total);
  std::atomic<int> first_error{std::numeric_limits<int>::max()};
#pragma omp parallel for schedule(dynamic, 1)
  for (int g = 0; g < total; ++g) {
    if (g > first_error.load(std::memory_order_relaxed)) continue;
    games[g] = play_one(tc, g / tc.games, g % tc.games);
    if (games[g].error) {
      int cur = first_error.load();
      while (g < cur && !first_error.compare_exchange_weak(cur, g)) {
      }
    }
  }
  const int stop = first_error.load();
  if (stop < total) games.resize(stop + 1);
  return collect(tc, games);
}

std::string report_csv(const TournamentReport& r) {
  std::ostringstream os;
  os << "pairing,games,builder_wins,blocker_wins,mean_rounds,violations\n";
  for (const auto& p : r.pairings) {
    char mean[32];
    std::snprintf(mean, sizeof mean, "%.3f", p.mean_rounds());
    os << p.pairing.label() << ',' << p.games << ',' << p.builder_wins << ',' << p.blocker_wins
       << ',' << mean << ',' << p.violations << '\n';
  }
  return os.str();
}

nlohmann::json report_json(const TournamentReport& r) {
  nlohmann::json pairings = nlohmann::json::array();
  for (const auto& p : r.pairings) {
    nlohmann::json metrics = nlohmann::json::array();
    for (const auto& [s, m] : p.metrics) {
      const double k = static_cast<double>(m.samples);
      metrics.push_back({{"s", s},
                         {"samples", m.samples},
                         {"mean_d", m.d / k},
                         {"mean_d1", m.d1 / k},
                         {"mean_d2", m.d2 / k},
                         {"mean_saved", m.saved / k}});
    }
    pairings.push_back({{"builder", p.pairing.builder},
                        {"blocker", p.pairing.blocker},
                        {"games", p.games},
                        {"builder_wins", p.builder_wins},
                        {"blocker_wins", p.blocker_wins},
                        {"mean_rounds", p.mean_rounds()},
                        {"violations", p.violations},
                        {"end_reasons", p.end_reasons},
                        {"forfeit_reasons", p.forfeit_reasons},
                        {"metrics", metrics}});
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"hook", v.hook},
                          {"message", v.message},
                          {"s", v.s},
                          {"k", v.k},
                          {"digest", v.digest},
                          {"state", v.state}});
  return {{"pairings", pairings}, {"violations", violations}};
}

}  // namespace oddcycle
