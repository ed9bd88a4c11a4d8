#include "oddcycle/transcript.hpp"

#include <fstream>
#include <sstream>

#include "oddcycle/errors.hpp"

namespace oddcycle {

using nlohmann::json;

Action Action::claim(EdgeId e, std::string branch) {
  Action a;
  a.kind = ActionKind::Claim;
  a.edge = e;
  a.branch = std::move(branch);
  return a;
}

Action Action::make_offer(std::vector<EdgeId> edges, std::string branch) {
  Action a;
  a.kind = ActionKind::Offer;
  a.offer = std::move(edges);
  a.branch = std::move(branch);
  return a;
}

Action Action::choose(EdgeId e, std::string branch) {
  Action a;
  a.kind = ActionKind::Choose;
  a.edge = e;
  a.branch = std::move(branch);
  return a;
}

Action Action::forfeit(std::string reason, std::string branch) {
  Action a;
  a.kind = ActionKind::Forfeit;
  a.reason = std::move(reason);
  a.branch = std::move(branch);
  return a;
}

int Transcript::final_round() const { return moves.empty() ? 0 : moves.back().s; }

namespace {

json edge_json(EdgeId e, int n) {
  auto [u, v] = edge_endpoints(e, n);
  return json::array({u, v});
}

EdgeId edge_from_json(const json& j, int n) {
  if (!j.is_array() || j.size() != 2) throw ArgumentError("edge must be a [u, v] pair");
  return edge_index(j[0].get<int>(), j[1].get<int>(), n);
}

const char* kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::Claim: return "claim";
    case ActionKind::Offer: return "offer";
    case ActionKind::Choose: return "choose";
    default: return "forfeit";
  }
}

ActionKind parse_kind(const std::string& s) {
  if (s == "claim") return ActionKind::Claim;
  if (s == "offer") return ActionKind::Offer;
  if (s == "choose") return ActionKind::Choose;
  if (s == "forfeit") return ActionKind::Forfeit;
  throw ArgumentError("unknown action type '" + s + "'");
}

}  // namespace

json config_to_json(const GameConfig& c) {
  return json{{"n", c.n},
              {"b", c.b},
              {"variant", std::string(to_string(c.variant))},
              {"rules", std::string(to_string(c.rules))},
              {"seed", c.seed}};
}

GameConfig config_from_json(const json& j) {
  GameConfig c;
  c.n = j.at("n").get<int>();
  c.b = j.at("b").get<int>();
  c.variant = parse_variant(j.at("variant").get<std::string>());
  c.rules = parse_rules(j.at("rules").get<std::string>());
  c.seed = j.value("seed", std::uint64_t{0});
  c.validate();
  return c;
}

json to_json(const Transcript& t) {
  const int n = t.config.n;
  json moves = json::array();
  for (const Move& m : t.moves) {
    json action{{"type", kind_name(m.action.kind)}};
    switch (m.action.kind) {
      case ActionKind::Claim:
      case ActionKind::Choose:
        action["edge"] = edge_json(m.action.edge, n);
        break;
      case ActionKind::Offer: {
        json edges = json::array();
        for (EdgeId e : m.action.offer) edges.push_back(edge_json(e, n));
        action["edges"] = std::move(edges);
        break;
      }
      case ActionKind::Forfeit:
        action["reason"] = m.action.reason;
        break;
    }
    moves.push_back(json{{"s", m.s},
                         {"k", m.k},
                         {"role", std::string(role_name(t.config.variant, m.role))},
                         {"action", std::move(action)},
                         {"branch", m.action.branch}});
  }
  json result = nullptr;
  if (t.result) {
    result = json{{"winner", std::string(to_string(t.result->winner))},
                  {"reason", std::string(to_string(t.result->reason))}};
  }
  return json{{"version", Transcript::kVersion},
              {"config", config_to_json(t.config)},
              {"moves", std::move(moves)},
              {"result", std::move(result)},
              {"digest", t.digest}};
}

Transcript transcript_from_json(const json& j) {
  try {
    if (j.at("version").get<int>() != Transcript::kVersion)
      throw ArgumentError("unsupported transcript version");
    Transcript t;
    t.config = config_from_json(j.at("config"));
    const int n = t.config.n;
    for (const json& jm : j.at("moves")) {
      Move m;
      m.s = jm.at("s").get<int>();
      m.k = jm.at("k").get<int>();
      m.role = parse_role(t.config.variant, jm.at("role").get<std::string>());
      const json& ja = jm.at("action");
      m.action.kind = parse_kind(ja.at("type").get<std::string>());
      switch (m.action.kind) {
        case ActionKind::Claim:
        case ActionKind::Choose:
          m.action.edge = edge_from_json(ja.at("edge"), n);
          break;
        case ActionKind::Offer:
          for (const json& je : ja.at("edges")) m.action.offer.push_back(edge_from_json(je, n));
          break;
        case ActionKind::Forfeit:
          m.action.reason = ja.at("reason").get<std::string>();
          break;
      }
      m.action.branch = jm.value("branch", std::string{});
      t.moves.push_back(std::move(m));
    }
    const json& jr = j.at("result");
    if (!jr.is_null()) {
      t.result = GameResult{parse_winner(jr.at("winner").get<std::string>()),
                            parse_end_reason(jr.at("reason").get<std::string>())};
    }
    t.digest = j.at("digest").get<std::string>();
    return t;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed transcript: ") + e.what());
  }
}

std::string dump_transcript(const Transcript& t) { return to_json(t).dump(2) + "\n"; }

Transcript load_transcript(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open transcript '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("cannot parse transcript: ") + e.what());
  }
  return transcript_from_json(j);
}

}  // namespace oddcycle
