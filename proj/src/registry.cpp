#include "oddcycle/errors.hpp"
#include "oddcycle/solver.hpp"
#include "oddcycle/strategies.hpp"

namespace oddcycle {

namespace {

struct Entry {
  const char* name;
  int role;  // 0 builder, 1 blocker, -1 either
  int variant;  // 0 MB, 1 CW, -1 either
};

constexpr Entry kEntries[] = {
    {"maker-oc", 0, 0},         {"maker-oc-adapted", 0, 0}, {"breaker-connected", 1, 0},
    {"client-connected", 0, 1}, {"random-maker", 0, 0},     {"random-breaker", 1, 0},
    {"random-waiter", 1, 1},    {"random-client", 0, 1},    {"greedy-maker", 0, 0},
    {"greedy-breaker", 1, 0},   {"greedy-waiter", 1, 1},    {"solver-oracle", -1, -1},
};

const Entry& lookup(const std::string& name) {
  for (const Entry& e : kEntries)
    if (name == e.name) return e;
  std::string known;
  for (const Entry& e : kEntries) known += std::string(known.empty() ? "" : ", ") + e.name;
  throw ArgumentError("unknown strategy '" + name + "' (known: " + known + ")");
}

// SplitMix64 step, used to derive independent seeds.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<std::string> strategy_names() {
  std::vector<std::string> out;
  for (const Entry& e : kEntries) out.emplace_back(e.name);
  return out;
}

Role strategy_role(const std::string& name, Variant variant) {
  const Entry& e = lookup(name);
  if (e.variant >= 0 && e.variant != static_cast<int>(variant))
    throw ArgumentError("strategy '" + name + "' does not play " + std::string(to_string(variant)));
  if (e.role < 0) throw ArgumentError("strategy '" + name + "' can play either side");
  return e.role == 0 ? Role::Builder : Role::Blocker;
}

std::unique_ptr<Strategy> make_strategy(const std::string& name, const GameConfig& config,
                                        Role role) {
  const Entry& e = lookup(name);
  if (e.variant >= 0 && e.variant != static_cast<int>(config.variant))
    throw ArgumentError("strategy '" + name + "' does not play " +
                        std::string(to_string(config.variant)));
  if (e.role >= 0 && e.role != static_cast<int>(role))
    throw ArgumentError("strategy '" + name + "' cannot play " +
                        std::string(role_name(config.variant, role)));
  const std::uint64_t seed = mix(config.seed ^ (role == Role::Builder ? 0x1ULL : 0x2ULL));
  if (name == "maker-oc") return std::make_unique<MakerOddCycle>(false);
  if (name == "maker-oc-adapted") return std::make_unique<MakerOddCycle>(true);
  if (name == "breaker-connected") return std::make_unique<BreakerConnected>();
  if (name == "client-connected") return std::make_unique<ClientConnected>();
  if (name.rfind("random-", 0) == 0) return std::make_unique<RandomPlayer>(role, seed);
  if (name == "greedy-maker") return std::make_unique<GreedyMaker>();
  if (name == "greedy-breaker") return std::make_unique<GreedyBreaker>();
  if (name == "greedy-waiter") return std::make_unique<GreedyWaiter>();
  return std::make_unique<SolverOracle>(config, role);
}

}  // namespace oddcycle
