#include "oddcycle/cli.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddcycle/errors.hpp"
#include "oddcycle/hooks.hpp"
#include "oddcycle/solver.hpp"
#include "oddcycle/tournament.hpp"

namespace oddcycle {

RoundMode parse_round_mode(const std::string& s) {
  if (s == "ceil") return RoundMode::Ceil;
  if (s == "floor") return RoundMode::Floor;
  if (s == "nearest") return RoundMode::Nearest;
  throw ArgumentError("unknown rounding '" + s + "' (ceil, floor, nearest)");
}

Rational parse_decimal(const std::string& text) {
  auto bad = [&] { return ArgumentError("not a decimal number: '" + text + "'"); };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  long long num = 0, den = 1;
  bool digits = false, point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !point) {
      point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (num > 99'999'999'999'999LL || (point && den > 99'999'999'999'999LL)) throw bad();
      num = num * 10 + (c - '0');
      if (point) den *= 10;
      digits = true;
    } else {
      break;
    }
  }
  if (!digits) throw bad();
  int exp = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    const char* first = text.data() + i + 1;
    const char* last = text.data() + text.size();
    if (first < last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exp);
    if (ec != std::errc() || ptr != last || exp < -15 || exp > 15) throw bad();
    i = text.size();
  }
  if (i != text.size()) throw bad();
  Rational r(negative ? -num : num, den);
  for (; exp > 0; --exp) r *= 10;
  for (; exp < 0; ++exp) r /= 10;
  return r;
}

int resolve_bias(int n, const std::string& fraction, RoundMode mode) {
  const Rational x = parse_decimal(fraction) * n;
  if (x < 0) throw ArgumentError("bias fraction must be non-negative");
  const long long fl = x.numerator() / x.denominator();
  const bool whole = x.numerator() % x.denominator() == 0;
  switch (mode) {
    case RoundMode::Floor:
      return static_cast<int>(fl);
    case RoundMode::Ceil:
      return static_cast<int>(whole ? fl : fl + 1);
    case RoundMode::Nearest:
      return static_cast<int>(x - Rational(fl) >= Rational(1, 2) ? fl + 1 : fl);
  }
  return static_cast<int>(fl);
}

namespace {

// Everything a command may read. Filled from --config first, then from flags.
struct RunConfig {
  int n = 6;
  int b = -1;
  std::string bias_frac;
  std::string round = "ceil";
  std::string variant = "maker-breaker";
  std::string rules = "free";
  std::uint64_t seed = 0;
  std::string builder;
  std::string blocker;
  std::vector<std::string> builders;
  std::vector<std::string> blockers;
  std::vector<std::string> pairings;
  std::string strategy;
  std::string role;
  int games = 10;
  bool assert_mode = false;
  bool hooks = true;
  bool metrics = false;
  bool serial = false;
  std::string eps = "0.06";
  std::string capacity;
  long long node_cap = 0;
  bool canonical = false;
  bool no_memo = false;
  bool threshold = false;
  std::string fixtures;
  bool check = false;
  bool continuous = false;
  int claims = 0;
  int audit_n = 0;
  bool quiet = false;
  std::string out;
  std::string csv;
  std::string json;
  std::string transcripts;
  std::string path;
};

std::string pairing_string(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array() && j.size() == 2) return j[0].get<std::string>() + ":" + j[1].get<std::string>();
  throw ArgumentError("config: a pairing is \"builder:blocker\" or [builder, blocker]");
}

std::string number_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_number()) throw ArgumentError("config: expected a number");
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, j.get<double>());
  return std::string(buf, ptr);
}

void load_config(const std::string& path, RunConfig& rc) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError("cannot parse config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ArgumentError("config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "n") rc.n = v.get<int>();
      else if (key == "b") rc.b = v.get<int>();
      else if (key == "bias_frac") rc.bias_frac = number_text(v);
      else if (key == "round") rc.round = v.get<std::string>();
      else if (key == "variant") rc.variant = v.get<std::string>();
      else if (key == "rules") rc.rules = v.get<std::string>();
      else if (key == "seed") rc.seed = v.get<std::uint64_t>();
      else if (key == "builder") rc.builder = v.get<std::string>();
      else if (key == "blocker") rc.blocker = v.get<std::string>();
      else if (key == "builders") rc.builders = v.get<std::vector<std::string>>();
      else if (key == "blockers") rc.blockers = v.get<std::vector<std::string>>();
      else if (key == "pairings") {
        rc.pairings.clear();
        for (const auto& p : v) rc.pairings.push_back(pairing_string(p));
      } else if (key == "strategy") rc.strategy = v.get<std::string>();
      else if (key == "role") rc.role = v.get<std::string>();
      else if (key == "games") rc.games = v.get<int>();
      else if (key == "assert") rc.assert_mode = v.get<bool>();
      else if (key == "hooks") rc.hooks = v.get<bool>();
      else if (key == "metrics") rc.metrics = v.get<bool>();
      else if (key == "eps") rc.eps = number_text(v);
      else if (key == "capacity") rc.capacity = v.get<std::string>();
      else if (key == "node_cap") rc.node_cap = v.get<long long>();
      else if (key == "canonical") rc.canonical = v.get<bool>();
      else if (key == "out") rc.out = v.get<std::string>();
      else if (key == "csv") rc.csv = v.get<std::string>();
      else if (key == "json") rc.json = v.get<std::string>();
      else if (key == "transcripts") rc.transcripts = v.get<std::string>();
      else throw ArgumentError("config: unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("config '" + path + "': " + e.what());
  }
}

// Finds --config before CLI11 runs so that flags override file values.
std::string find_config(const std::vector<std::string>& args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

GameConfig game_config(const RunConfig& rc) {
  GameConfig c;
  c.n = rc.n;
  c.variant = parse_variant(rc.variant);
  c.rules = parse_rules(rc.rules);
  c.seed = rc.seed;
  if (!rc.bias_frac.empty()) {
    if (rc.b >= 0) throw ArgumentError("give either --b or --bias-frac, not both");
    c.b = resolve_bias(rc.n, rc.bias_frac, parse_round_mode(rc.round));
  } else {
    if (rc.b < 0) throw ArgumentError("the bias is missing (--b or --bias-frac)");
    c.b = rc.b;
  }
  c.validate();
  return c;
}

Capacity capacity_of(const RunConfig& rc) {
  return rc.capacity.empty() ? capacity_from_env() : parse_capacity(rc.capacity, capacity_from_env());
}

double eps_of(const RunConfig& rc) {
  return boost::rational_cast<double>(parse_decimal(rc.eps));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot write '" + path + "'");
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Pairing parse_pairing(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ArgumentError("pairing '" + s + "' is not builder:blocker");
  return {s.substr(0, colon), s.substr(colon + 1)};
}

TournamentConfig hook_options(const RunConfig& rc) {
  TournamentConfig tc;
  tc.assert_mode = rc.assert_mode;
  tc.invariant_hooks = rc.hooks;
  tc.metrics = rc.metrics;
  tc.eps = eps_of(rc);
  return tc;
}

void print_violations(const std::vector<Violation>& vs, std::ostream& out, std::size_t limit = 10) {
  for (std::size_t i = 0; i < vs.size() && i < limit; ++i)
    out << "violation " << vs[i].hook << " at (s=" << vs[i].s << ", k=" << vs[i].k
        << "): " << vs[i].message << "\n";
  if (vs.size() > limit) out << "... " << vs.size() - limit << " more\n";
}

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------------------

int cmd_play(const RunConfig& rc, std::ostream& out) {
  const GameConfig c = game_config(rc);
  if (rc.builder.empty() || rc.blocker.empty())
    throw ArgumentError("play needs --builder and --blocker");
  GameRun run = play_game(c, {rc.builder, rc.blocker}, hook_options(rc));
  const Transcript& t = run.transcript;
  out << "winner: " << to_string(t.result->winner) << " (" << to_string(t.result->reason)
      << ") after " << t.final_round() << " rounds, digest " << t.digest << "\n";
  print_violations(run.violations, out);
  if (!rc.out.empty()) write_file(rc.out, dump_transcript(t));
  return kExitOk;
}

int cmd_tournament(const RunConfig& rc, std::ostream& out) {
  TournamentConfig tc = hook_options(rc);
  tc.base = game_config(rc);
  tc.games = rc.games;
  tc.keep_transcripts = !rc.transcripts.empty();
  for (const auto& p : rc.pairings) tc.pairings.push_back(parse_pairing(p));
  std::vector<std::string> builders = rc.builders, blockers = rc.blockers;
  if (!rc.builder.empty()) builders.push_back(rc.builder);
  if (!rc.blocker.empty()) blockers.push_back(rc.blocker);
  for (const auto& x : builders)
    for (const auto& y : blockers) tc.pairings.push_back({x, y});
  if (tc.pairings.empty()) throw ArgumentError("tournament needs --pairing or --builder/--blocker");

  TournamentReport r = rc.serial ? run_tournament_serial(tc) : run_tournament(tc);
  const std::string csv = report_csv(r);
  if (rc.csv.empty()) out << csv;
  else write_file(rc.csv, csv);
  if (!rc.json.empty()) write_file(rc.json, report_json(r).dump(2) + "\n");
  if (tc.keep_transcripts) {
    std::filesystem::create_directories(rc.transcripts);
    for (std::size_t g = 0; g < r.transcripts.size(); ++g) {
      char name[64];
      std::snprintf(name, sizeof name, "game_%03zu_%05zu.json", g / tc.games, g % tc.games);
      write_file((std::filesystem::path(rc.transcripts) / name).string(),
                 dump_transcript(r.transcripts[g]));
    }
  }
  print_violations(r.violations, out);
  return kExitOk;
}

int cmd_solve(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  SolverOptions so;
  so.memo = !rc.no_memo;
  so.canonical = rc.canonical;
  so.node_cap = rc.node_cap;
  so.capacity = capacity_of(rc);
  if (!rc.fixtures.empty()) {
    const std::string text = dump_fixtures(solver_fixtures(so));
    if (!rc.check) {
      write_file(rc.fixtures, text);
      out << "wrote " << rc.fixtures << "\n";
      return kExitOk;
    }
    if (read_file(rc.fixtures) != text) {
      err << "fixture mismatch: " << rc.fixtures << " differs from the regenerated values\n";
      return kExitFailure;
    }
    out << "fixtures match " << rc.fixtures << "\n";
    return kExitOk;
  }
  if (rc.threshold) {
    const int t = exact_threshold(rc.n, parse_variant(rc.variant), parse_rules(rc.rules), so);
    out << "threshold: " << t << "\n";
    return kExitOk;
  }
  const SolveResult r = solve_game(game_config(rc), so);
  out << "winner: " << to_string(r.winner) << " (" << r.nodes << " nodes)\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& rc, std::ostream& out) {
  const GameConfig c = game_config(rc);
  if (rc.strategy.empty()) throw ArgumentError("verify needs --strategy");
  const Role role = rc.role.empty() ? strategy_role(rc.strategy, c.variant)
                                    : parse_role(c.variant, rc.role);
  auto fixed = make_strategy(rc.strategy, c, role);
  ViolationLog log(rc.assert_mode);
  ClientLemmaHook lemma(log);
  std::vector<Hook*> hooks;
  if (rc.hooks && rc.strategy == "client-connected" && c.rules == Rules::Connected)
    hooks.push_back(&lemma);
  VerifyOptions vo;
  vo.node_cap = rc.node_cap;
  vo.capacity = capacity_of(rc);
  const VerificationResult r = verify_strategy(c, *fixed, role, hooks, vo);
  out << "verdict: "
      << (r.verdict == Verdict::WinsAgainstAll ? "wins-against-all" : "counterexample") << " ("
      << r.nodes << " nodes, depth " << r.max_depth << ")\n";
  print_violations(log.violations(), out);
  if (r.counterexample) {
    out << "shortest loss: " << r.counterexample->moves.size() << " half-moves\n";
    if (!rc.out.empty()) write_file(rc.out, dump_transcript(*r.counterexample));
  }
  return kExitOk;
}

int cmd_optimize(const RunConfig& rc, std::ostream& out) {
  if (rc.continuous) {
    const CaseTable t = continuous_case_minimum();
    out << render_case_table(t);
    if (!rc.json.empty()) write_file(rc.json, case_table_to_json(t).dump(2) + "\n");
    return kExitOk;
  }
  if (rc.claims > 0) {
    long long pairs = 0, argmins = 0, bad = 0;
    nlohmann::json failures = nlohmann::json::array();
    for (int n = 3; n <= rc.claims; ++n) {
      for (int b = 1; b < n; ++b) {
        const MinimizeResult m = rc.serial ? minimize_f_serial(n, b) : minimize_f(n, b);
        ++pairs;
        for (const auto& g : m.argmins) {
          ++argmins;
          const ClaimCheck cc = check_claims(g);
          if (cc.singletons && cc.a0_window) continue;
          ++bad;
          out << "n=" << n << " b=" << b << " argmin " << structure_to_json(g).dump()
              << (cc.singletons ? "" : " breaks |A_j| = 1")
              << (cc.a0_window ? "" : " breaks the |A_0| window") << "\n";
          failures.push_back({{"n", n}, {"b", b}, {"structure", structure_to_json(g)}});
        }
      }
    }
    out << pairs << " (n, b) pairs, " << argmins << " argmins, " << bad << " claim failures\n";
    if (!rc.json.empty())
      write_file(rc.json, nlohmann::json{{"pairs", pairs}, {"argmins", argmins}, {"failures", failures}}
                              .dump(2) + "\n");
    return kExitOk;
  }
  if (rc.b < 1) throw ArgumentError("optimize needs --continuous, --claims N, or --n with --b");
  const MinimizeResult m = rc.serial ? minimize_f_serial(rc.n, rc.b) : minimize_f(rc.n, rc.b);
  out << "m = " << rational_text(m.m) << " = " << boost::rational_cast<double>(m.m)
      << ", m/n = " << boost::rational_cast<double>(m.m) / rc.n << " (" << m.structures
      << " shapes)\n";
  nlohmann::json shapes = nlohmann::json::array();
  for (const auto& g : m.argmins) {
    out << "argmin " << structure_to_json(g).dump() << "\n";
    shapes.push_back(structure_to_json(g));
  }
  if (!rc.json.empty())
    write_file(rc.json, nlohmann::json{{"n", rc.n},
                                       {"b", rc.b},
                                       {"m", rational_text(m.m)},
                                       {"argmins", shapes},
                                       {"structures", m.structures}}
                            .dump(2) + "\n");
  return kExitOk;
}

int cmd_audit(const RunConfig& rc, std::ostream& out) {
  const double eps = eps_of(rc);
  if (!(eps > 0 && eps < 1)) throw ArgumentError("--eps must lie in (0, 1)");
  const AuditReport r = breaker_constant_audit(
      eps, rc.audit_n > 0 ? std::optional<int>(rc.audit_n) : std::nullopt);
  out << render_audit(r);
  if (!rc.json.empty()) write_file(rc.json, audit_to_json(r).dump(2) + "\n");
  return kExitOk;
}

int cmd_replay(const RunConfig& rc, std::ostream& out) {
  const Transcript t = load_transcript(rc.path);
  const GameState final_state = replay(t);
  if (!rc.quiet) {
    GameState st(t.config);
    const std::vector<EdgeId>* pending = nullptr;
    for (const Move& m : t.moves) {
      switch (m.action.kind) {
        case ActionKind::Claim:
          st.apply_claim(m.role, m.action.edge);
          break;
        case ActionKind::Offer:
          pending = &m.action.offer;
          continue;
        case ActionKind::Choose:
          apply_round(st, *pending, m.action.edge);
          break;
        case ActionKind::Forfeit:
          break;
      }
      if (m.action.kind == ActionKind::Forfeit) {
        out << "round " << m.s << ": " << role_name(t.config.variant, m.role) << " forfeits ("
            << m.action.reason << ")\n";
        continue;
      }
      if (!ends_round(st, m)) continue;
      const MetricsSnapshot ms = take_metrics(st);
      out << "round " << m.s << ": |V1|=" << st.part_size(1) << " |V2|=" << st.part_size(2)
          << " |R|=" << st.part_size(kUntouched) << " builder=" << st.builder_edge_count()
          << " unclaimed=" << st.unclaimed_count() << " d=" << rational_text(ms.d)
          << " saved=" << ms.saved << "\n";
    }
  }
  out << "ok: " << to_string(final_state.winner()) << " (" << to_string(final_state.end_reason())
      << "), digest " << final_state.digest() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Odd-cycle Maker-Breaker and Client-Waiter games on K_n"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with run parameters; flags override it");
  app.add_option("--capacity", rc.capacity, "solver guards, e.g. mb_n=7,cw_n=6");

  auto game_options = [&](CLI::App* sub) {
    sub->add_option("--n", rc.n, "number of vertices");
    sub->add_option("--b", rc.b, "bias");
    sub->add_option("--bias-frac", rc.bias_frac, "bias as a fraction of n");
    sub->add_option("--round", rc.round, "rounding of --bias-frac: ceil, floor or nearest");
    sub->add_option("--variant", rc.variant, "maker-breaker (mb) or client-waiter (cw)");
    sub->add_option("--rules", rc.rules, "free or connected");
    sub->add_option("--seed", rc.seed, "random seed");
  };

  CLI::App* play = app.add_subcommand("play", "play one game");
  game_options(play);
  play->add_option("--builder", rc.builder, "builder strategy");
  play->add_option("--blocker", rc.blocker, "blocker strategy");
  play->add_flag("--assert", rc.assert_mode, "stop at the first invariant violation");
  play->add_flag("!--no-hooks", rc.hooks, "do not attach invariant hooks");
  play->add_option("--eps", rc.eps, "epsilon for the saved-edge bound");
  play->add_option("--out", rc.out, "transcript path");

  CLI::App* tour = app.add_subcommand("tournament", "play many games");
  game_options(tour);
  tour->add_option("--pairing", rc.pairings, "builder:blocker, repeatable");
  tour->add_option("--builder", rc.builders, "builder strategies")->delimiter(',');
  tour->add_option("--blocker", rc.blockers, "blocker strategies")->delimiter(',');
  tour->add_option("--games", rc.games, "games per pairing");
  tour->add_flag("--assert", rc.assert_mode, "stop at the first invariant violation");
  tour->add_flag("!--no-hooks", rc.hooks, "do not attach invariant hooks");
  tour->add_flag("--metrics", rc.metrics, "aggregate end-of-round metrics");
  tour->add_flag("--serial", rc.serial, "run on one thread");
  tour->add_option("--eps", rc.eps, "epsilon for the saved-edge bound");
  tour->add_option("--csv", rc.csv, "CSV report path (default stdout)");
  tour->add_option("--json", rc.json, "JSON report path");
  tour->add_option("--transcripts", rc.transcripts, "directory for game transcripts");

  CLI::App* solve = app.add_subcommand("solve", "exact game values");
  game_options(solve);
  solve->add_flag("--threshold", rc.threshold, "smallest bias at which the blocker wins");
  solve->add_flag("--canonical", rc.canonical, "identify positions up to vertex relabelling");
  solve->add_flag("--no-memo", rc.no_memo, "disable the transposition table");
  solve->add_option("--node-cap", rc.node_cap, "node limit");
  solve->add_option("--fixtures", rc.fixtures, "write the fixture file (or compare with --check)");
  solve->add_flag("--check", rc.check, "compare regenerated fixtures byte for byte");

  CLI::App* verify = app.add_subcommand("verify", "check a strategy against every opponent");
  game_options(verify);
  verify->add_option("--strategy", rc.strategy, "strategy to verify");
  verify->add_option("--role", rc.role, "role, when the strategy name does not fix it");
  verify->add_option("--node-cap", rc.node_cap, "node limit");
  verify->add_flag("--assert", rc.assert_mode, "stop at the first invariant violation");
  verify->add_flag("!--no-hooks", rc.hooks, "do not attach invariant hooks");
  verify->add_option("--out", rc.out, "path for the counterexample transcript");

  CLI::App* optimize = app.add_subcommand("optimize", "extremal problem and case analysis");
  optimize->add_flag("--continuous", rc.continuous, "continuous case table");
  optimize->add_option("--claims", rc.claims, "check argmin claims for all n up to this value");
  optimize->add_option("--n", rc.n, "number of vertices");
  optimize->add_option("--b", rc.b, "bias");
  optimize->add_flag("--serial", rc.serial, "run on one thread");
  optimize->add_option("--json", rc.json, "JSON report path");

  CLI::App* audit = app.add_subcommand("audit", "evaluate the breaker-side inequalities");
  audit->add_option("--eps", rc.eps, "epsilon");
  audit->add_option("--n", rc.audit_n, "also evaluate at this n");
  audit->add_option("--json", rc.json, "JSON report path");

  CLI::App* rep = app.add_subcommand("replay", "validate a transcript and print its rounds");
  rep->add_option("path", rc.path, "transcript file")->required();
  rep->add_flag("--quiet", rc.quiet, "only print the final line");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    const std::string cfg = find_config(args);
    if (!cfg.empty()) load_config(cfg, rc);
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*play) return cmd_play(rc, out);
    if (*tour) return cmd_tournament(rc, out);
    if (*solve) return cmd_solve(rc, out, err);
    if (*verify) return cmd_verify(rc, out);
    if (*optimize) return cmd_optimize(rc, out);
    if (*audit) return cmd_audit(rc, out);
    if (*rep) return cmd_replay(rc, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitFailure;
  } catch (const CorruptionError& e) {
    err << "corrupt transcript: " << e.what() << "\n";
    return kExitFailure;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << " after " << e.nodes_explored()
        << " nodes; raise the guard with --capacity or ODDCYCLE_CAPACITY_OVERRIDE\n";
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace oddcycle
