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

#include "pte/game.h"

#include <algorithm>
#include <utility>

#include "pte/error.h"

namespace pte {

namespace {

template <typename Id>
Id Lookup(const std::unordered_map<std::string, Id>& index,
          std::string_view name, const char* what) {
  auto it = index.find(std::string(name));
  if (it == index.end()) {
    throw Error(ErrorKind::kLookup,
                std::string("unknown ") + what + " '" + std::string(name) + "'");
  }
  return it->second;
}

}  // namespace

PlayerId Game::AddPlayer(std::string name) {
  if (player_index_.count(name)) {
    throw Error(ErrorKind::kInput, "duplicate player '" + name + "'");
  }
  const PlayerId id(num_players());
  player_index_.emplace(name, id);
  players_.push_back(std::move(name));
  return id;
}

ActionId Game::AddAction(std::string name) {
  if (action_index_.count(name)) {
    throw Error(ErrorKind::kInput, "duplicate action '" + name + "'");
  }
  const ActionId id(num_actions());
  action_index_.emplace(name, id);
  actions_.push_back(std::move(name));
  return id;
}

VertexId Game::AddVertex(Vertex vertex) {
  if (vertex_index_.count(vertex.name)) {
    throw Error(ErrorKind::kInput, "duplicate vertex id '" + vertex.name + "'");
  }
  const VertexId id(num_vertices());
  vertex_index_.emplace(vertex.name, id);
  vertices_.push_back(std::move(vertex));
  return id;
}

VertexId Game::AddNode(std::string id, PlayerId player,
                       std::string infoset_label) {
  if (!player.valid() || player.value() >= num_players()) {
    throw Error(ErrorKind::kLookup, "unknown player for node '" + id + "'");
  }
  InfosetId cell;
  auto it = infoset_index_.find(infoset_label);
  if (it == infoset_index_.end()) {
    cell = InfosetId(num_infosets());
    infoset_index_.emplace(infoset_label, cell);
    infosets_.push_back({std::move(infoset_label), {}});
  } else {
    cell = it->second;
  }
  Vertex v;
  v.name = std::move(id);
  v.player = player;
  v.infoset = cell;
  const VertexId vid = AddVertex(std::move(v));
  infosets_[cell.value()].members.push_back(vid);
  nodes_.push_back(vid);
  return vid;
}

VertexId Game::AddOutcome(std::string id, std::vector<Number> payoffs) {
  Vertex v;
  v.name = std::move(id);
  v.is_outcome = true;
  v.payoffs = std::move(payoffs);
  v.outcome_index = static_cast<int>(outcomes_.size());
  const VertexId vid = AddVertex(std::move(v));
  outcomes_.push_back(vid);
  return vid;
}

void Game::AddMove(VertexId node, ActionId action, VertexId child) {
  if (!action.valid() || action.value() >= num_actions()) {
    throw Error(ErrorKind::kLookup, "unknown action id");
  }
  At(child);
  NodeAt(node);
  Vertex& v = vertices_[node.value()];
  auto pos = std::lower_bound(
      v.moves.begin(), v.moves.end(), action,
      [](const Move& m, ActionId a) { return m.action < a; });
  if (pos != v.moves.end() && pos->action == action) {
    throw Error(ErrorKind::kInput, "node '" + v.name + "' already has action '" +
                                       actions_[action.value()] + "'");
  }
  v.moves.insert(pos, Move{action, child});
  Vertex& c = vertices_[child.value()];
  if (c.in_degree++ == 0) c.parent = node;
}

void Game::SetRoot(VertexId root) {
  At(root);
  root_ = root;
}

const Game::Vertex& Game::At(VertexId v) const {
  if (!v.valid() || v.value() >= num_vertices()) {
    throw Error(ErrorKind::kLookup,
                "unknown vertex id " + std::to_string(v.value()));
  }
  return vertices_[v.value()];
}

const Game::Vertex& Game::NodeAt(VertexId v) const {
  const Vertex& vertex = At(v);
  if (vertex.is_outcome) {
    throw Error(ErrorKind::kDomain, "'" + vertex.name + "' is an outcome");
  }
  return vertex;
}

const Game::Vertex& Game::OutcomeAt(VertexId v) const {
  const Vertex& vertex = At(v);
  if (!vertex.is_outcome) {
    throw Error(ErrorKind::kDomain, "'" + vertex.name + "' is not an outcome");
  }
  return vertex;
}

const std::string& Game::PlayerName(PlayerId p) const {
  if (!p.valid() || p.value() >= num_players()) {
    throw Error(ErrorKind::kLookup, "unknown player id");
  }
  return players_[p.value()];
}

const std::string& Game::ActionName(ActionId a) const {
  if (!a.valid() || a.value() >= num_actions()) {
    throw Error(ErrorKind::kLookup, "unknown action id");
  }
  return actions_[a.value()];
}

const std::string& Game::VertexName(VertexId v) const { return At(v).name; }

const std::string& Game::InfosetLabel(InfosetId c) const {
  if (!c.valid() || c.value() >= num_infosets()) {
    throw Error(ErrorKind::kLookup, "unknown infoset id");
  }
  return infosets_[c.value()].label;
}

PlayerId Game::PlayerByName(std::string_view name) const {
  return Lookup(player_index_, name, "player");
}
ActionId Game::ActionByName(std::string_view name) const {
  return Lookup(action_index_, name, "action");
}
VertexId Game::VertexByName(std::string_view name) const {
  return Lookup(vertex_index_, name, "vertex");
}
InfosetId Game::InfosetByLabel(std::string_view label) const {
  return Lookup(infoset_index_, label, "infoset");
}

std::optional<VertexId> Game::FindVertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

bool Game::IsOutcome(VertexId v) const { return At(v).is_outcome; }

int Game::OutcomeIndex(VertexId outcome) const {
  return OutcomeAt(outcome).outcome_index;
}

PlayerId Game::PlayerAt(VertexId node) const { return NodeAt(node).player; }
InfosetId Game::InfosetOf(VertexId node) const { return NodeAt(node).infoset; }

std::span<const Move> Game::Moves(VertexId node) const {
  return NodeAt(node).moves;
}

std::vector<ActionId> Game::ActionsAt(VertexId node) const {
  std::vector<ActionId> out;
  for (const Move& m : Moves(node)) out.push_back(m.action);
  return out;
}

const std::vector<VertexId>& Game::InfosetMembers(InfosetId c) const {
  InfosetLabel(c);
  return infosets_[c.value()].members;
}

PlayerId Game::InfosetPlayer(InfosetId c) const {
  return PlayerAt(InfosetMembers(c).front());
}

std::vector<ActionId> Game::InfosetActions(InfosetId c) const {
  return ActionsAt(InfosetMembers(c).front());
}

VertexId Game::Parent(VertexId v) const { return At(v).parent; }
int Game::InDegree(VertexId v) const { return At(v).in_degree; }

const Number& Game::Payoff(PlayerId player, VertexId outcome) const {
  const Vertex& v = OutcomeAt(outcome);
  if (!player.valid() || player.value() >= static_cast<int>(v.payoffs.size())) {
    throw Error(ErrorKind::kLookup, "no payoff for player at '" + v.name + "'");
  }
  return v.payoffs[player.value()];
}

std::span<const Number> Game::Payoffs(VertexId outcome) const {
  return OutcomeAt(outcome).payoffs;
}

bool operator==(const Game& a, const Game& b) {
  if (a.players_ != b.players_ || a.actions_ != b.actions_ ||
      a.nodes_.size() != b.nodes_.size() ||
      a.outcomes_.size() != b.outcomes_.size() ||
      a.root_.valid() != b.root_.valid()) {
    return false;
  }
  if (a.root_.valid() && a.At(a.root_).name != b.At(b.root_).name) {
    return false;
  }
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const Game::Vertex& x = a.At(a.nodes_[i]);
    const Game::Vertex& y = b.At(b.nodes_[i]);
    if (x.name != y.name || x.player != y.player ||
        a.infosets_[x.infoset.value()].label !=
            b.infosets_[y.infoset.value()].label ||
        x.moves.size() != y.moves.size()) {
      return false;
    }
    for (std::size_t m = 0; m < x.moves.size(); ++m) {
      if (x.moves[m].action != y.moves[m].action ||
          a.At(x.moves[m].child).name != b.At(y.moves[m].child).name) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < a.outcomes_.size(); ++i) {
    const Game::Vertex& x = a.At(a.outcomes_[i]);
    const Game::Vertex& y = b.At(b.outcomes_[i]);
    if (x.name != y.name || x.payoffs != y.payoffs) return false;
  }
  return true;
}

// ---- Navigation ----

std::vector<VertexId> Descendants(const Game& game, VertexId start) {
  std::vector<bool> seen(game.num_vertices(), false);
  std::vector<VertexId> stack = {start};
  game.IsOutcome(start);  // lookup check
  seen[start.value()] = true;
  std::vector<VertexId> out;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    if (game.IsOutcome(v)) continue;
    for (const Move& m : game.Moves(v)) {
      if (!seen[m.child.value()]) {
        seen[m.child.value()] = true;
        stack.push_back(m.child);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> InfosetDescendants(const Game& game, InfosetId cell) {
  std::vector<VertexId> out;
  for (VertexId member : game.InfosetMembers(cell)) {
    std::vector<VertexId> d = Descendants(game, member);
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexId Successor(const Game& game, VertexId node, ActionId action) {
  for (const Move& m : game.Moves(node)) {
    if (m.action == action) return m.child;
  }
  throw Error(ErrorKind::kDomain, "action '" + game.ActionName(action) +
                                      "' is not available at '" +
                                      game.VertexName(node) + "'");
}

std::vector<VertexId> InfosetSuccessors(const Game& game, InfosetId cell,
                                        ActionId action) {
  std::vector<VertexId> out;
  for (VertexId member : game.InfosetMembers(cell)) {
    out.push_back(Successor(game, member, action));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ActionId ActionToward(const Game& game, VertexId from, VertexId target) {
  game.IsOutcome(from);
  VertexId child = target;
  VertexId parent = game.Parent(target);
  // Bounded by the vertex count so malformed (cyclic) inputs terminate.
  for (int guard = 0; parent.valid() && guard < game.num_vertices(); ++guard) {
    if (parent == from) {
      for (const Move& m : game.Moves(from)) {
        if (m.child == child) return m.action;
      }
    }
    child = parent;
    parent = game.Parent(parent);
  }
  throw Error(ErrorKind::kDomain, "'" + game.VertexName(target) +
                                      "' is not a strict descendant of '" +
                                      game.VertexName(from) + "'");
}

ActionId ActionToward(const Game& game, InfosetId from, VertexId target) {
  VertexId v = game.Parent(target);
  for (int guard = 0; v.valid() && guard < game.num_vertices(); ++guard) {
    if (game.InfosetOf(v) == from) return ActionToward(game, v, target);
    v = game.Parent(v);
  }
  throw Error(ErrorKind::kDomain, "no member of infoset '" +
                                      game.InfosetLabel(from) +
                                      "' is a strict ancestor of '" +
                                      game.VertexName(target) + "'");
}

}  // namespace pte
