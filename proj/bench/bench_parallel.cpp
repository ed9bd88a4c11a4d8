#include <benchmark/benchmark.h>

#include "oddcycle/optimizer.hpp"
#include "oddcycle/tournament.hpp"

using namespace oddcycle;

namespace {

void BM_MinimizeSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_f_serial(n, n / 3));
}

void BM_MinimizeParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_f(n, n / 3));
}

TournamentConfig tournament_config(int n) {
  TournamentConfig tc;
  tc.base = {n, n / 2 - 3, Variant::MakerBreaker, Rules::Connected, 1};
  tc.pairings = {{"random-maker", "breaker-connected"}, {"greedy-maker", "breaker-connected"}};
  tc.games = 8;
  return tc;
}

void BM_TournamentSerial(benchmark::State& state) {
  const TournamentConfig tc = tournament_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_tournament_serial(tc));
}

void BM_TournamentParallel(benchmark::State& state) {
  const TournamentConfig tc = tournament_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_tournament(tc));
}

}  // namespace

BENCHMARK(BM_MinimizeSerial)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimizeParallel)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TournamentSerial)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TournamentParallel)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
