// Copyright 2026 The PTE Solver Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pte/io.h"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <sstream>
#include <unordered_set>

#include "pte/error.h"

namespace pte {

namespace {

std::string Child(const std::string& path, std::string_view token) {
  std::string out = path + "/";
  for (char c : token) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string Child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const char* TypeName(const Json& j) { return j.type_name(); }

void ExpectObject(const Json& j, const std::string& path,
                  std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) {
    throw ParseError("SCHEMA", path,
                     std::string("expected an object, got ") + TypeName(j));
  }
  for (const auto& [key, value] : j.items()) {
    const bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) {
      throw ParseError("UNKNOWN_KEY", Child(path, key),
                       "unexpected key '" + key + "'");
    }
  }
  for (std::string_view key : required) {
    if (!j.contains(key)) {
      throw ParseError("MISSING_KEY", path,
                       "missing key '" + std::string(key) + "'");
    }
  }
}

const Json& ExpectArray(const Json& j, const std::string& path) {
  if (!j.is_array()) {
    throw ParseError("SCHEMA", path,
                     std::string("expected an array, got ") + TypeName(j));
  }
  return j;
}

const Json& ExpectMap(const Json& j, const std::string& path) {
  if (!j.is_object()) {
    throw ParseError("SCHEMA", path,
                     std::string("expected an object, got ") + TypeName(j));
  }
  return j;
}

std::string ExpectString(const Json& j, const std::string& path) {
  if (!j.is_string()) {
    throw ParseError("SCHEMA", path,
                     std::string("expected a string, got ") + TypeName(j));
  }
  return j.get<std::string>();
}

Number ExpectNumber(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(INT64_MAX)) {
        throw ParseError("BAD_NUMBER", path, "integer out of range");
      }
      return Number(static_cast<std::int64_t>(u));
    }
    return Number(j.get<std::int64_t>());
  }
  if (j.is_number_float()) {
    throw ParseError("BAD_NUMBER", path,
                     "floating-point literal; write it as a decimal string");
  }
  if (j.is_string()) {
    if (auto n = Number::Parse(j.get<std::string>())) return *n;
    throw ParseError("BAD_NUMBER", path,
                     "'" + j.get<std::string>() + "' is not a decimal number");
  }
  throw ParseError("BAD_NUMBER", path,
                   std::string("expected a number, got ") + TypeName(j));
}

std::vector<std::string> ExpectStrings(const Json& j, const std::string& path,
                                       bool unique) {
  ExpectArray(j, path);
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string s = ExpectString(j[i], Child(path, i));
    if (unique && !seen.insert(s).second) {
      throw ParseError("DUPLICATE_ID", Child(path, i),
                       "duplicate entry '" + s + "'");
    }
    out.push_back(std::move(s));
  }
  return out;
}

Json Parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("SYNTAX", "", e.what());
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string Quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json Names(const Game& game, const std::vector<VertexId>& ids) {
  Json out = Json::array();
  for (VertexId v : ids) out.push_back(game.VertexName(v));
  return out;
}

}  // namespace

Json NumberToJson(const Number& n) {
  if (auto i = n.ToInt64()) return *i;
  return n.ToString();
}

// ---- Game documents ----

Game GameFromJson(const Json& doc) {
  ExpectObject(doc, "", {"players", "actions", "nodes", "outcomes", "root"});
  Game game;
  for (std::string& p : ExpectStrings(doc["players"], "/players", true)) {
    game.AddPlayer(std::move(p));
  }
  for (std::string& a : ExpectStrings(doc["actions"], "/actions", true)) {
    game.AddAction(std::move(a));
  }

  std::unordered_set<std::string> ids;
  auto claim = [&](const std::string& id, const std::string& path) {
    if (!ids.insert(id).second) {
      throw ParseError("DUPLICATE_ID", path, "duplicate vertex id '" + id + "'");
    }
  };

  const Json& nodes = ExpectArray(doc["nodes"], "/nodes");
  std::vector<VertexId> node_ids;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = Child("/nodes", i);
    ExpectObject(nodes[i], path, {"id", "player", "infoset", "moves"});
    const std::string id = ExpectString(nodes[i]["id"], Child(path, "id"));
    claim(id, Child(path, "id"));
    const std::string player =
        ExpectString(nodes[i]["player"], Child(path, "player"));
    PlayerId owner;
    try {
      owner = game.PlayerByName(player);
    } catch (const Error&) {
      throw ParseError("UNKNOWN_REFERENCE", Child(path, "player"),
                       "unknown player '" + player + "'");
    }
    const std::string cell =
        ExpectString(nodes[i]["infoset"], Child(path, "infoset"));
    ExpectMap(nodes[i]["moves"], Child(path, "moves"));
    node_ids.push_back(game.AddNode(id, owner, cell));
  }

  const Json& outcomes = ExpectArray(doc["outcomes"], "/outcomes");
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const std::string path = Child("/outcomes", i);
    ExpectObject(outcomes[i], path, {"id", "payoffs"});
    const std::string id = ExpectString(outcomes[i]["id"], Child(path, "id"));
    claim(id, Child(path, "id"));
    const std::string ppath = Child(path, "payoffs");
    const Json& payoffs = ExpectMap(outcomes[i]["payoffs"], ppath);
    std::vector<std::optional<Number>> values(game.num_players());
    for (const auto& [player, value] : payoffs.items()) {
      PlayerId p;
      try {
        p = game.PlayerByName(player);
      } catch (const Error&) {
        throw ParseError("UNKNOWN_REFERENCE", Child(ppath, player),
                         "unknown player '" + player + "'");
      }
      values[p.value()] = ExpectNumber(value, Child(ppath, player));
    }
    std::vector<Number> row;
    for (int p = 0; p < game.num_players(); ++p) {
      if (!values[p]) {
        throw ParseError("MISSING_KEY", ppath,
                         "no payoff for player '" +
                             game.PlayerName(PlayerId(p)) + "'");
      }
      row.push_back(*values[p]);
    }
    game.AddOutcome(id, std::move(row));
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string mpath = Child(Child("/nodes", i), "moves");
    for (const auto& [action, child] : nodes[i]["moves"].items()) {
      const std::string path = Child(mpath, action);
      ActionId a;
      try {
        a = game.ActionByName(action);
      } catch (const Error&) {
        throw ParseError("UNKNOWN_REFERENCE", path,
                         "unknown action '" + action + "'");
      }
      const std::string target = ExpectString(child, path);
      const auto c = game.FindVertex(target);
      if (!c) {
        throw ParseError("UNKNOWN_REFERENCE", path,
                         "unknown vertex '" + target + "'");
      }
      game.AddMove(node_ids[i], a, *c);
    }
  }

  const std::string root = ExpectString(doc["root"], "/root");
  const auto r = game.FindVertex(root);
  if (!r) {
    throw ParseError("UNKNOWN_REFERENCE", "/root",
                     "unknown vertex '" + root + "'");
  }
  game.SetRoot(*r);
  return game;
}

Game ParseGame(std::string_view text) { return GameFromJson(Parse(text)); }

Json GameToJson(const Game& game) {
  Json doc;
  doc["players"] = Json::array();
  for (int p = 0; p < game.num_players(); ++p) {
    doc["players"].push_back(game.PlayerName(PlayerId(p)));
  }
  doc["actions"] = Json::array();
  for (int a = 0; a < game.num_actions(); ++a) {
    doc["actions"].push_back(game.ActionName(ActionId(a)));
  }
  doc["nodes"] = Json::array();
  for (VertexId n : game.choice_nodes()) {
    Json node;
    node["id"] = game.VertexName(n);
    node["player"] = game.PlayerName(game.PlayerAt(n));
    node["infoset"] = game.InfosetLabel(game.InfosetOf(n));
    node["moves"] = Json::object();
    for (const Move& m : game.Moves(n)) {
      node["moves"][game.ActionName(m.action)] = game.VertexName(m.child);
    }
    doc["nodes"].push_back(std::move(node));
  }
  doc["outcomes"] = Json::array();
  for (VertexId z : game.outcomes()) {
    Json outcome;
    outcome["id"] = game.VertexName(z);
    outcome["payoffs"] = Json::object();
    const auto payoffs = game.Payoffs(z);
    for (std::size_t p = 0; p < payoffs.size(); ++p) {
      outcome["payoffs"][game.PlayerName(PlayerId(static_cast<int>(p)))] =
          NumberToJson(payoffs[p]);
    }
    doc["outcomes"].push_back(std::move(outcome));
  }
  doc["root"] = game.root().valid() ? Json(game.VertexName(game.root()))
                                    : Json(nullptr);
  return doc;
}

std::string SerializeGame(const Game& game) { return Dump(GameToJson(game)); }

// ---- Setup documents ----

SpacetimeSetup SetupFromJson(const Json& doc) {
  ExpectObject(doc, "", {"dimension", "agents", "actions", "points"},
               {"contingency", "utilities"});
  SpacetimeSetup setup;
  if (!doc["dimension"].is_number_integer()) {
    throw ParseError("SCHEMA", "/dimension", "expected an integer");
  }
  setup.dimension = doc["dimension"].get<int>();
  setup.agents = ExpectStrings(doc["agents"], "/agents", false);
  setup.actions = ExpectStrings(doc["actions"], "/actions", false);

  const Json& points = ExpectArray(doc["points"], "/points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string path = Child("/points", i);
    ExpectObject(points[i], path, {"id", "agent", "coords", "actions"});
    DecisionPoint pt;
    pt.id = ExpectString(points[i]["id"], Child(path, "id"));
    pt.agent = ExpectString(points[i]["agent"], Child(path, "agent"));
    const std::string cpath = Child(path, "coords");
    const Json& coords = ExpectArray(points[i]["coords"], cpath);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      pt.coords.push_back(ExpectNumber(coords[k], Child(cpath, k)));
    }
    pt.actions = ExpectStrings(points[i]["actions"], Child(path, "actions"),
                               false);
    setup.points.push_back(std::move(pt));
  }

  if (doc.contains("contingency")) {
    const Json& rows = ExpectMap(doc["contingency"], "/contingency");
    for (const auto& [point, row] : rows.items()) {
      const std::string path = Child("/contingency", point);
      auto& out = setup.contingency[point];
      for (const auto& [earlier, action] : ExpectMap(row, path).items()) {
        out[earlier] = ExpectString(action, Child(path, earlier));
      }
    }
  }
  if (doc.contains("utilities")) {
    const Json& table = ExpectMap(doc["utilities"], "/utilities");
    for (const auto& [key, row] : table.items()) {
      const std::string path = Child("/utilities", key);
      auto& out = setup.utilities[key];
      for (const auto& [agent, value] : ExpectMap(row, path).items()) {
        out[agent] = ExpectNumber(value, Child(path, agent));
      }
    }
  }
  return setup;
}

SpacetimeSetup ParseSetup(std::string_view text) {
  return SetupFromJson(Parse(text));
}

Json SetupToJson(const SpacetimeSetup& setup) {
  Json doc;
  doc["dimension"] = setup.dimension;
  doc["agents"] = setup.agents;
  doc["actions"] = setup.actions;
  doc["points"] = Json::array();
  for (const DecisionPoint& pt : setup.points) {
    Json j;
    j["id"] = pt.id;
    j["agent"] = pt.agent;
    j["coords"] = Json::array();
    for (const Number& c : pt.coords) j["coords"].push_back(c.ToString());
    j["actions"] = pt.actions;
    doc["points"].push_back(std::move(j));
  }
  doc["contingency"] = Json::object();
  for (const auto& [point, row] : setup.contingency) {
    doc["contingency"][point] = Json::object();
    for (const auto& [earlier, action] : row) {
      doc["contingency"][point][earlier] = action;
    }
  }
  doc["utilities"] = Json::object();
  for (const auto& [key, row] : setup.utilities) {
    doc["utilities"][key] = Json::object();
    for (const auto& [agent, value] : row) {
      doc["utilities"][key][agent] = NumberToJson(value);
    }
  }
  return doc;
}

std::string SerializeSetup(const SpacetimeSetup& setup) {
  return Dump(SetupToJson(setup));
}

// ---- Reports and traces ----

Json ReportToJson(const ValidationReport& report) {
  auto issues = [](const std::vector<Issue>& list) {
    Json out = Json::array();
    for (const Issue& issue : list) {
      Json j;
      j["code"] = issue.code;
      j["message"] = issue.message;
      j["ids"] = issue.ids;
      out.push_back(std::move(j));
    }
    return out;
  };
  Json doc;
  doc["ok"] = report.ok();
  doc["errors"] = issues(report.errors);
  doc["warnings"] = issues(report.warnings);
  doc["is_canonical"] = report.is_canonical;
  doc["has_perfect_recall"] = report.has_perfect_recall;
  doc["has_ties"] = report.has_ties;
  return doc;
}

Json TraceToJson(const Game& game, const SolveResult& result) {
  Json doc;
  doc["steps"] = Json::array();
  for (const SolverState& state : result.steps) {
    Json s;
    s["step"] = state.step;
    s["surviving"] = Names(game, state.surviving);
    s["reached_infosets"] = Json::array();
    for (InfosetId c : state.reached) {
      s["reached_infosets"].push_back(game.InfosetLabel(c));
    }
    s["maximins"] = Json::array();
    for (const MaximinRecord& m : state.maximins) {
      Json j;
      j["infoset"] = game.InfosetLabel(m.infoset);
      j["player"] = game.PlayerName(m.player);
      j["value"] = NumberToJson(m.value);
      j["action"] = game.ActionName(m.action);
      s["maximins"].push_back(std::move(j));
    }
    s["preempted"] = Json::array();
    for (const Preemption& p : state.preemptions) {
      Json j;
      j["outcome"] = game.VertexName(p.outcome);
      j["player"] = game.PlayerName(p.player);
      j["infoset"] = game.InfosetLabel(p.infoset);
      s["preempted"].push_back(std::move(j));
    }
    doc["steps"].push_back(std::move(s));
  }
  Json final;
  final["status"] = std::string(SolveStatusName(result.status));
  final["equilibrium"] = Names(game, result.fixpoint);
  final["has_ties"] = result.has_ties;
  if (result.status == SolveStatus::kEmpty && result.eliminating_step >= 0) {
    final["last_nonempty"] = Names(game, result.last_nonempty);
    final["eliminating_step"] = result.eliminating_step;
  }
  doc["final"] = std::move(final);
  return doc;
}

// ---- Graphviz ----

std::string ExportDot(const Game& game, const SolveResult& result, int step) {
  if (step < 0 || step >= static_cast<int>(result.steps.size())) {
    throw Error(ErrorKind::kDomain,
                "step " + std::to_string(step) + " outside the trace (0.." +
                    std::to_string(static_cast<int>(result.steps.size()) - 1) +
                    ")");
  }
  const SolverState& state = result.steps[step];
  const bool last = step + 1 == static_cast<int>(result.steps.size());
  const std::set<VertexId> alive(state.surviving.begin(),
                                 state.surviving.end());
  const std::set<VertexId> winners(result.fixpoint.begin(),
                                   result.fixpoint.end());
  const std::set<InfosetId> reached(state.reached.begin(), state.reached.end());

  std::ostringstream out;
  out << "digraph game {\n";
  out << "  graph [rankdir=TB, label=" << Quote("step " + std::to_string(step))
      << "];\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  out << "  edge [fontname=\"Helvetica\"];\n";

  auto node_line = [&](VertexId n) {
    const bool black = reached.count(game.InfosetOf(n)) > 0;
    std::string attrs = "shape=circle, label=" +
                        Quote(game.PlayerName(game.PlayerAt(n))) +
                        ", tooltip=" + Quote(game.VertexName(n));
    attrs += black ? ", style=filled, fillcolor=black, fontcolor=white"
                   : ", style=solid";
    return "  " + Quote(game.VertexName(n)) + " [" + attrs + "];\n";
  };

  for (int c = 0; c < game.num_infosets(); ++c) {
    const auto& members = game.InfosetMembers(InfosetId(c));
    if (members.size() < 2) continue;
    out << "  subgraph cluster_" << c << " {\n";
    out << "    style=dashed;\n";
    out << "    label=" << Quote(game.InfosetLabel(InfosetId(c))) << ";\n";
    for (VertexId n : members) out << "  " << node_line(n);
    out << "  }\n";
  }
  for (VertexId n : game.choice_nodes()) {
    if (game.InfosetMembers(game.InfosetOf(n)).size() < 2) out << node_line(n);
  }
  for (VertexId z : game.outcomes()) {
    std::string label = "(";
    const auto payoffs = game.Payoffs(z);
    for (std::size_t p = 0; p < payoffs.size(); ++p) {
      if (p) label += ", ";
      label += payoffs[p].ToString();
    }
    label += ")";
    std::string attrs = "shape=box, label=" + Quote(label) +
                        ", tooltip=" + Quote(game.VertexName(z));
    if (!alive.count(z)) {
      attrs += ", style=filled, fillcolor=gray90, color=gray60, "
               "fontcolor=gray50";
    } else if (last && winners.count(z)) {
      attrs += ", style=\"filled,bold\", fillcolor=gold, penwidth=2";
    }
    out << "  " << Quote(game.VertexName(z)) << " [" << attrs << "];\n";
  }
  for (VertexId n : game.choice_nodes()) {
    for (const Move& m : game.Moves(n)) {
      out << "  " << Quote(game.VertexName(n)) << " -> "
          << Quote(game.VertexName(m.child))
          << " [label=" << Quote(game.ActionName(m.action)) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pte
