#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddcycle/hooks.hpp"

namespace oddcycle {

struct Pairing {
  std::string builder;
  std::string blocker;

  std::string label() const { return builder + " vs " + blocker; }
};

// Invariant hooks are attached by strategy name: degree regularity and the
// saved-edge bound for breaker-connected in connected Maker-Breaker, the
// structure check for maker-oc, the lemma checks for client-connected.
struct TournamentConfig {
  GameConfig base;  // base.seed seeds the whole run
  std::vector<Pairing> pairings;
  int games = 1;  // per pairing
  bool assert_mode = false;
  bool invariant_hooks = true;
  bool metrics = false;  // end-of-round metrics aggregates
  double eps = 0.06;     // for the saved-edge bound
  bool keep_transcripts = false;
  // Extra observer built for every game (called concurrently; keep it stateless).
  std::function<std::unique_ptr<Hook>(ViolationLog&)> extra_hook;
};

struct GameRun {
  Transcript transcript;
  std::vector<Violation> violations;
  std::vector<MetricsSnapshot> metrics;  // when options.metrics
};

/// One game of `pairing` under `config` (its seed is used as is), with the
/// hooks selected by `options`. Assert-mode violations throw.
GameRun play_game(const GameConfig& config, const Pairing& pairing,
                  const TournamentConfig& options);

/// Seed of game `index` of pairing `pairing`; independent of scheduling.
std::uint64_t game_seed(std::uint64_t base, int pairing, int index);

struct RoundMetrics {
  long long samples = 0;
  double d = 0, d1 = 0, d2 = 0, saved = 0;  // sums over samples
};

struct PairingReport {
  Pairing pairing;
  int games = 0;
  int builder_wins = 0;
  int blocker_wins = 0;
  long long total_rounds = 0;
  long long violations = 0;
  std::map<std::string, int> end_reasons;
  std::map<std::string, int> forfeit_reasons;
  std::map<int, RoundMetrics> metrics;  // by round s

  double mean_rounds() const { return games ? double(total_rounds) / games : 0.0; }
};

struct TournamentReport {
  std::vector<PairingReport> pairings;
  std::vector<Violation> violations;  // in game order
  std::vector<Transcript> transcripts;  // when keep_transcripts, in game order

  long long total_violations() const;
};

/// Games run on OpenMP threads; the report equals run_tournament_serial's.
/// In assert mode the first violation (by game order) is rethrown as
/// InvariantViolation after the remaining earlier games finish.
TournamentReport run_tournament(const TournamentConfig& config);
TournamentReport run_tournament_serial(const TournamentConfig& config);

/// Header: pairing,games,builder_wins,blocker_wins,mean_rounds,violations.
std::string report_csv(const TournamentReport& report);
nlohmann::json report_json(const TournamentReport& report);

}  // namespace oddcycle
