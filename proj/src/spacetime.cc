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

#include "pte/spacetime.h"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>

#include "pte/error.h"
#include "pte/normal_form.h"

namespace pte {

namespace {

constexpr const char* kBottomToken = "_";

bool LabelIsKeySafe(const std::string& label) {
  return !label.empty() && label != kBottomToken &&
         label != kEmptyHistoryId && label.find(',') == std::string::npos;
}

std::unordered_map<std::string, int> PointIndex(const SpacetimeSetup& setup) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(setup.points.size()); ++i) {
    index.emplace(setup.points[i].id, i);
  }
  return index;
}

bool HasAction(const DecisionPoint& point, const std::string& action) {
  return std::find(point.actions.begin(), point.actions.end(), action) !=
         point.actions.end();
}

ValidationReport StructureReport(const SpacetimeSetup& setup) {
  ValidationReport report;
  auto error = [&](std::string code, std::string message,
                   std::vector<std::string> ids) {
    report.errors.push_back(
        {std::move(code), std::move(message), std::move(ids)});
  };
  if (setup.dimension < 1) {
    error("BAD_DIMENSION", "dimension must be at least 1",
          {std::to_string(setup.dimension)});
  }
  const std::set<std::string> agents(setup.agents.begin(), setup.agents.end());
  if (agents.size() != setup.agents.size()) {
    error("DUPLICATE_ID", "agents must be distinct", {});
  }
  const std::set<std::string> actions(setup.actions.begin(),
                                      setup.actions.end());
  if (actions.size() != setup.actions.size()) {
    error("DUPLICATE_ID", "actions must be distinct", {});
  }
  for (const std::string& a : setup.actions) {
    if (!LabelIsKeySafe(a)) {
      error("BAD_LABEL",
            "action labels must be non-empty, not '_' or '∅', without commas",
            {a});
    }
  }
  std::set<std::string> ids;
  for (const DecisionPoint& p : setup.points) {
    if (!ids.insert(p.id).second) {
      error("DUPLICATE_ID", "duplicate decision point id", {p.id});
    }
    if (!agents.count(p.agent)) {
      error("UNKNOWN_AGENT", "decision point owned by an undeclared agent",
            {p.id, p.agent});
    }
    if (static_cast<int>(p.coords.size()) != setup.dimension) {
      error("BAD_COORDINATES", "coordinate count differs from dimension",
            {p.id});
    }
    if (p.actions.empty()) {
      error("EMPTY_ACTIONS", "decision point without actions", {p.id});
    }
    std::set<std::string> own;
    for (const std::string& a : p.actions) {
      if (!actions.count(a)) {
        error("UNKNOWN_ACTION", "action not in the global action set",
              {p.id, a});
      }
      if (!own.insert(a).second) {
        error("DUPLICATE_ID", "action listed twice at a decision point",
              {p.id, a});
      }
    }
  }
  return report;
}

void RequireStructure(const SpacetimeSetup& setup) {
  const ValidationReport report = StructureReport(setup);
  if (!report.ok()) {
    const Issue& first = report.errors.front();
    throw Error(ErrorKind::kInput,
                "invalid setup: " + first.code + " " + first.message);
  }
}

}  // namespace

std::string HistoryKey(const History& history) {
  if (history.empty()) return kEmptyHistoryId;
  std::string key;
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (i) key += ',';
    key += history[i] ? *history[i] : kBottomToken;
  }
  return key;
}

History ParseHistoryKey(const std::string& key) {
  History out;
  if (key == kEmptyHistoryId) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = key.find(',', start);
    const std::string token = key.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty()) {
      throw Error(ErrorKind::kInput, "empty entry in history key '" + key + "'");
    }
    out.push_back(token == kBottomToken ? Slot() : Slot(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

CausalRelation Separation(std::span<const Number> p, std::span<const Number> q,
                          int dimension) {
  if (dimension < 1 || static_cast<int>(p.size()) != dimension ||
      static_cast<int>(q.size()) != dimension) {
    throw Error(ErrorKind::kInput,
                "coordinates must have exactly `dimension` entries");
  }
  Number interval;
  for (int i = 0; i + 1 < dimension; ++i) {
    const Number d = q[i] - p[i];
    interval = interval + d * d;
  }
  const Number dt = q[dimension - 1] - p[dimension - 1];
  interval = interval - dt * dt;

  if (interval.Sign() > 0) return CausalRelation::kSpacelike;
  if (dt.Sign() == 0) {
    // interval <= 0 with dt == 0 forces every spatial delta to zero.
    return CausalRelation::kColocated;
  }
  return dt.Sign() > 0 ? CausalRelation::kPrecedes : CausalRelation::kFollows;
}

CausalDag BuildCausalDag(const SpacetimeSetup& setup) {
  RequireStructure(setup);
  const int n = static_cast<int>(setup.points.size());
  CausalDag dag;
  dag.precedes.assign(n, std::vector<bool>(n, false));
  dag.successors.assign(n, {});
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      if (Separation(setup.points[p].coords, setup.points[q].coords,
                     setup.dimension) == CausalRelation::kPrecedes) {
        dag.precedes[p][q] = true;
        dag.successors[p].push_back(q);
      }
    }
  }
  return dag;
}

std::vector<int> TotalOrder(const SpacetimeSetup& setup) {
  const CausalDag dag = BuildCausalDag(setup);
  const int n = static_cast<int>(setup.points.size());
  const int time = setup.dimension - 1;

  auto later = [&](int a, int b) {
    const DecisionPoint& x = setup.points[a];
    const DecisionPoint& y = setup.points[b];
    if (x.coords[time] != y.coords[time]) {
      return x.coords[time] > y.coords[time];
    }
    for (int i = 0; i < time; ++i) {
      if (x.coords[i] != y.coords[i]) return x.coords[i] > y.coords[i];
    }
    return x.id > y.id;
  };
  std::priority_queue<int, std::vector<int>, decltype(later)> ready(later);

  std::vector<int> pending(n, 0);
  for (int p = 0; p < n; ++p) {
    for (int q : dag.successors[p]) ++pending[q];
  }
  for (int p = 0; p < n; ++p) {
    if (pending[p] == 0) ready.push(p);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int p = ready.top();
    ready.pop();
    order.push_back(p);
    for (int q : dag.successors[p]) {
      if (--pending[q] == 0) ready.push(q);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorKind::kInternal, "timelike precedence has a cycle");
  }
  return order;
}

ContingencyTriangle BuildTriangle(const SpacetimeSetup& setup) {
  ContingencyTriangle triangle;
  triangle.order = TotalOrder(setup);
  const int n = triangle.size();
  std::vector<int> position(n);
  for (int k = 0; k < n; ++k) position[triangle.order[k]] = k;
  const auto index = PointIndex(setup);

  triangle.rows.resize(n);
  for (int k = 0; k < n; ++k) triangle.rows[k].assign(k, Slot());
  for (const auto& [point, row] : setup.contingency) {
    auto pit = index.find(point);
    if (pit == index.end()) {
      throw Error(ErrorKind::kInput,
                  "contingency row for unknown point '" + point + "'");
    }
    const int k = position[pit->second];
    for (const auto& [earlier, action] : row) {
      auto eit = index.find(earlier);
      if (eit == index.end()) {
        throw Error(ErrorKind::kInput,
                    "contingency entry for unknown point '" + earlier + "'");
      }
      const int l = position[eit->second];
      if (l >= k) {
        throw Error(ErrorKind::kInput, "contingency of '" + point +
                                           "' refers to '" + earlier +
                                           "', which is not earlier");
      }
      triangle.rows[k][l] = action;
    }
  }
  return triangle;
}

ValidationReport ValidateTriangle(const SpacetimeSetup& setup) {
  RequireStructure(setup);
  ValidationReport report;
  auto error = [&](std::string code, std::string message,
                   std::vector<std::string> ids) {
    report.errors.push_back(
        {std::move(code), std::move(message), std::move(ids)});
  };

  const std::vector<int> order = TotalOrder(setup);
  const int n = static_cast<int>(order.size());
  std::vector<int> position(n);
  for (int k = 0; k < n; ++k) position[order[k]] = k;
  const auto index = PointIndex(setup);

  // Entries that cannot be placed in the triangle at all.
  bool placeable = true;
  for (const auto& [point, row] : setup.contingency) {
    auto pit = index.find(point);
    if (pit == index.end()) {
      error("TRIANGLE_UNKNOWN_POINT", "contingency row for an unknown point",
            {point});
      placeable = false;
      continue;
    }
    for (const auto& [earlier, action] : row) {
      auto eit = index.find(earlier);
      if (eit == index.end()) {
        error("TRIANGLE_UNKNOWN_POINT",
              "contingency entry refers to an unknown point", {point, earlier});
        placeable = false;
      } else if (position[eit->second] >= position[pit->second]) {
        error("TRIANGLE_NOT_CAUSAL",
              "contingency entry refers to a point that does not precede it",
              {point, earlier});
        placeable = false;
      }
    }
  }
  if (!placeable) return report;

  const ContingencyTriangle triangle = BuildTriangle(setup);
  const CausalDag dag = BuildCausalDag(setup);
  const auto& rows = triangle.rows;
  for (int k = 0; k < n; ++k) {
    const DecisionPoint& pk = setup.points[order[k]];
    for (int l = 0; l < k; ++l) {
      const DecisionPoint& pl = setup.points[order[l]];
      bool compatible = true;
      for (int m = 0; m < l; ++m) {
        if (rows[l][m] && rows[l][m] != rows[k][m]) {
          compatible = false;
          break;
        }
      }
      const bool causal = dag.Precedes(order[l], order[k]);
      if (rows[k][l]) {
        if (!causal) {
          error("TRIANGLE_NOT_CAUSAL",
                "action required at a point that is not in the causal past",
                {pk.id, pl.id});
        }
        if (!compatible) {
          error("TRIANGLE_INCONSISTENT",
                "action required at a point whose own contingency contradicts "
                "this row",
                {pk.id, pl.id});
        }
        if (!HasAction(pl, *rows[k][l])) {
          error("TRIANGLE_ACTION_UNAVAILABLE",
                "required action is not available at the referenced point",
                {pk.id, pl.id, *rows[k][l]});
        }
      } else if (causal && compatible) {
        error("TRIANGLE_MISSING",
              "causal-past point with compatible contingency must be assigned "
              "an action",
              {pk.id, pl.id});
      }
    }
  }
  return report;
}

bool Matches(const ContingencyTriangle& triangle, const History& prefix,
             int position) {
  if (position < 0 || position >= triangle.size() ||
      static_cast<int>(prefix.size()) != position) {
    throw Error(ErrorKind::kInput,
                "prefix length must equal the position being matched");
  }
  const auto& row = triangle.rows[position];
  for (int m = 0; m < position; ++m) {
    if (row[m] && prefix[m] != row[m]) return false;
  }
  return true;
}

HistorySets EnumerateHistories(const SpacetimeSetup& setup) {
  const ContingencyTriangle triangle = BuildTriangle(setup);
  const int n = triangle.size();
  HistorySets sets;
  History h;
  auto rec = [&](auto&& self) -> void {
    const int m = static_cast<int>(h.size());
    if (m == n) {
      sets.complete.push_back(h);
      return;
    }
    if (Matches(triangle, h, m)) {
      sets.incomplete.push_back(h);
      for (const std::string& a : setup.points[triangle.order[m]].actions) {
        h.push_back(a);
        self(self);
        h.pop_back();
      }
    } else {
      h.push_back(Slot());
      self(self);
      h.pop_back();
    }
  };
  rec(rec);
  return sets;
}

namespace {

History SuccessorHatImpl(const SpacetimeSetup& setup,
                         const ContingencyTriangle& triangle,
                         const History& incomplete,
                         const std::string& action) {
  const int n = triangle.size();
  const int m = static_cast<int>(incomplete.size());
  if (m >= n || !Matches(triangle, incomplete, m)) {
    throw Error(ErrorKind::kDomain, "history '" + HistoryKey(incomplete) +
                                        "' is not awaiting a decision");
  }
  const DecisionPoint& pending = setup.points[triangle.order[m]];
  if (!HasAction(pending, action)) {
    throw Error(ErrorKind::kDomain, "action '" + action +
                                        "' is not available at '" +
                                        pending.id + "'");
  }
  History next = incomplete;
  next.push_back(action);
  while (static_cast<int>(next.size()) < n &&
         !Matches(triangle, next, static_cast<int>(next.size()))) {
    next.push_back(Slot());
  }
  return next;
}

}  // namespace

History SuccessorHat(const SpacetimeSetup& setup, const History& incomplete,
                     const std::string& action) {
  return SuccessorHatImpl(setup, BuildTriangle(setup), incomplete, action);
}

ValidationReport ValidateSetup(const SpacetimeSetup& setup) {
  ValidationReport report = StructureReport(setup);
  if (!report.ok()) return report;
  ValidationReport triangle = ValidateTriangle(setup);
  if (!triangle.ok()) return triangle;

  auto error = [&](std::string code, std::string message,
                   std::vector<std::string> ids) {
    report.errors.push_back(
        {std::move(code), std::move(message), std::move(ids)});
  };
  const HistorySets sets = EnumerateHistories(setup);
  std::set<std::string> keys;
  for (const History& h : sets.complete) {
    const std::string key = HistoryKey(h);
    keys.insert(key);
    auto it = setup.utilities.find(key);
    if (it == setup.utilities.end()) {
      error("UTILITY_MISSING", "no utilities for consistent complete history",
            {key});
      continue;
    }
    for (const std::string& agent : setup.agents) {
      if (!it->second.count(agent)) {
        error("UTILITY_MISSING", "no utility for agent at history",
              {key, agent});
      }
    }
    for (const auto& [agent, value] : it->second) {
      if (std::find(setup.agents.begin(), setup.agents.end(), agent) ==
          setup.agents.end()) {
        error("UTILITY_UNKNOWN_AGENT", "utility for an undeclared agent",
              {key, agent});
      }
    }
  }
  for (const auto& [key, values] : setup.utilities) {
    if (!keys.count(key)) {
      error("UTILITY_UNKNOWN_HISTORY",
            "utilities given for a history that is not consistent and complete",
            {key});
    }
  }
  return report;
}

Game BuildGame(const SpacetimeSetup& setup) {
  const ValidationReport report = ValidateSetup(setup);
  if (!report.ok()) {
    const Issue& first = report.errors.front();
    std::string ids;
    for (const std::string& id : first.ids) ids += " " + id;
    throw Error(ErrorKind::kPrecondition,
                "invalid setup: " + first.code + " " + first.message + ":" +
                    ids);
  }
  const ContingencyTriangle triangle = BuildTriangle(setup);
  const HistorySets sets = EnumerateHistories(setup);

  Game game;
  for (const std::string& agent : setup.agents) game.AddPlayer(agent);
  for (const std::string& action : setup.actions) game.AddAction(action);

  for (const History& h : sets.incomplete) {
    const DecisionPoint& pending = setup.points[triangle.order[h.size()]];
    game.AddNode(HistoryKey(h), game.PlayerByName(pending.agent), pending.id);
  }
  for (const History& h : sets.complete) {
    const auto& utilities = setup.utilities.at(HistoryKey(h));
    std::vector<Number> payoffs;
    for (const std::string& agent : setup.agents) {
      payoffs.push_back(utilities.at(agent));
    }
    game.AddOutcome(HistoryKey(h), std::move(payoffs));
  }
  for (const History& h : sets.incomplete) {
    const VertexId node = game.VertexByName(HistoryKey(h));
    const DecisionPoint& pending = setup.points[triangle.order[h.size()]];
    for (const std::string& a : pending.actions) {
      const History next = SuccessorHatImpl(setup, triangle, h, a);
      game.AddMove(node, game.ActionByName(a),
                   game.VertexByName(HistoryKey(next)));
    }
  }
  game.SetRoot(game.VertexByName(kEmptyHistoryId));
  return game;
}

bool SpacelikeAgentCheck(const SpacetimeSetup& setup) {
  RequireStructure(setup);
  const auto& points = setup.points;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t q = p + 1; q < points.size(); ++q) {
      if (points[p].agent != points[q].agent) continue;
      const CausalRelation r =
          Separation(points[p].coords, points[q].coords, setup.dimension);
      if (r == CausalRelation::kSpacelike || r == CausalRelation::kColocated) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace pte
