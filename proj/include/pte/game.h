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

#ifndef PTE_GAME_H_
#define PTE_GAME_H_

// Extensive-form games with imperfect information.
//
// A game is a tree of choice nodes and outcomes. Every choice node belongs to
// a player and to an information set ("cell"); all nodes of a cell share the
// same player and the same set of available actions. Outcomes carry one exact
// payoff per player. Payoffs are ordinal: only their comparisons matter.
//
// Choice nodes and outcomes share one vertex numbering, in declaration order.
// A Game is built incrementally and is treated as immutable once validated;
// every algorithm in this library takes it by const reference.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pte/number.h"

namespace pte {

template <typename Tag>
class StrongId {
 public:
  constexpr StrongId() = default;
  constexpr explicit StrongId(int value) : value_(value) {}
  constexpr int value() const { return value_; }
  constexpr bool valid() const { return value_ >= 0; }
  friend constexpr auto operator<=>(StrongId, StrongId) = default;

 private:
  int value_ = -1;
};

using VertexId = StrongId<struct VertexTag>;
using PlayerId = StrongId<struct PlayerTag>;
using ActionId = StrongId<struct ActionTag>;
using InfosetId = StrongId<struct InfosetTag>;

struct Move {
  ActionId action;
  VertexId child;
  friend bool operator==(const Move&, const Move&) = default;
};

class Game {
 public:
  // ---- Construction ----
  PlayerId AddPlayer(std::string name);
  ActionId AddAction(std::string name);
  // Cells are the equivalence classes of `infoset_label`.
  VertexId AddNode(std::string id, PlayerId player, std::string infoset_label);
  // `payoffs` is indexed by PlayerId.
  VertexId AddOutcome(std::string id, std::vector<Number> payoffs);
  void AddMove(VertexId node, ActionId action, VertexId child);
  void SetRoot(VertexId root);

  // ---- Names and lookup ----
  int num_players() const { return static_cast<int>(players_.size()); }
  int num_actions() const { return static_cast<int>(actions_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_infosets() const { return static_cast<int>(infosets_.size()); }

  const std::string& PlayerName(PlayerId p) const;
  const std::string& ActionName(ActionId a) const;
  const std::string& VertexName(VertexId v) const;
  const std::string& InfosetLabel(InfosetId c) const;

  // Throw Error(kLookup) for unknown names.
  PlayerId PlayerByName(std::string_view name) const;
  ActionId ActionByName(std::string_view name) const;
  VertexId VertexByName(std::string_view name) const;
  InfosetId InfosetByLabel(std::string_view label) const;
  std::optional<VertexId> FindVertex(std::string_view name) const;

  // ---- Structure ----
  VertexId root() const { return root_; }
  bool IsOutcome(VertexId v) const;
  const std::vector<VertexId>& choice_nodes() const { return nodes_; }
  const std::vector<VertexId>& outcomes() const { return outcomes_; }
  // Position of an outcome in outcomes(); dense in [0, outcomes().size()).
  int OutcomeIndex(VertexId outcome) const;

  PlayerId PlayerAt(VertexId node) const;
  InfosetId InfosetOf(VertexId node) const;
  // Sorted by action id.
  std::span<const Move> Moves(VertexId node) const;
  std::vector<ActionId> ActionsAt(VertexId node) const;

  const std::vector<VertexId>& InfosetMembers(InfosetId c) const;
  // Player and actions of the cell's first member.
  PlayerId InfosetPlayer(InfosetId c) const;
  std::vector<ActionId> InfosetActions(InfosetId c) const;

  // First recorded parent; invalid for parentless vertices.
  VertexId Parent(VertexId v) const;
  int InDegree(VertexId v) const;

  const Number& Payoff(PlayerId player, VertexId outcome) const;
  std::span<const Number> Payoffs(VertexId outcome) const;

  // Structural equality by names: same players and actions, same choice
  // nodes and outcomes in the same declaration order with equal contents.
  // Independent of how nodes and outcomes were interleaved when built.
  friend bool operator==(const Game& a, const Game& b);

 private:
  struct Vertex {
    std::string name;
    bool is_outcome = false;
    PlayerId player;
    InfosetId infoset;
    std::vector<Move> moves;
    std::vector<Number> payoffs;
    VertexId parent;
    int in_degree = 0;
    int outcome_index = -1;
  };
  struct Infoset {
    std::string label;
    std::vector<VertexId> members;
  };

  const Vertex& At(VertexId v) const;
  const Vertex& NodeAt(VertexId v) const;
  const Vertex& OutcomeAt(VertexId v) const;
  VertexId AddVertex(Vertex vertex);

  std::vector<std::string> players_;
  std::vector<std::string> actions_;
  std::vector<Vertex> vertices_;
  std::vector<Infoset> infosets_;
  std::vector<VertexId> nodes_;
  std::vector<VertexId> outcomes_;
  VertexId root_;

  std::unordered_map<std::string, PlayerId> player_index_;
  std::unordered_map<std::string, ActionId> action_index_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, InfosetId> infoset_index_;
};

// ---- Validation ----

struct Issue {
  std::string code;
  std::string message;
  std::vector<std::string> ids;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;
  bool is_canonical = false;
  bool has_perfect_recall = false;
  bool has_ties = false;

  bool ok() const { return errors.empty(); }
  bool HasError(std::string_view code) const;
};

// Checks every structural constraint: single root, injective successor
// function, non-empty action sets, cells compatible with players and actions,
// payoffs for every player. Violations are reported, never thrown.
ValidationReport ValidateGame(const Game& game);

// True iff some player has the same payoff at two distinct outcomes.
bool HasTies(const Game& game);

// ---- Navigation ----

// Reflexive-transitive closure of the successor function, sorted by id.
std::vector<VertexId> Descendants(const Game& game, VertexId start);
// Union of Descendants over the members of a cell, sorted by id.
std::vector<VertexId> InfosetDescendants(const Game& game, InfosetId cell);

// node ⊕ action. Throws Error(kDomain) if the action is not available.
VertexId Successor(const Game& game, VertexId node, ActionId action);
// cell ⊕ action: one child per member node, sorted by id.
std::vector<VertexId> InfosetSuccessors(const Game& game, InfosetId cell,
                                        ActionId action);

// The unique action at `from` whose subtree contains `target`. Throws
// Error(kDomain) if `target` is not a strict descendant of `from`.
ActionId ActionToward(const Game& game, VertexId from, VertexId target);
// Cell version: uses the (unique, in a canonical game) member that is a strict
// ancestor of `target`.
ActionId ActionToward(const Game& game, InfosetId from, VertexId target);

// ---- Canonical form and recall ----

// No cell contains a node together with one of its strict descendants.
bool IsCanonical(const Game& game);

// No player can tell two nodes of one of their cells apart by the sequence of
// (cell, action) pairs they themselves played on the way there.
bool HasPerfectRecall(const Game& game);

// Replaces every node that has a same-cell strict ancestor m by its subtree
// along the action m took toward it, until no such node remains. Pruned
// vertices disappear; surviving vertices keep their ids and order. Requires a
// structurally valid game (Error(kPrecondition) otherwise).
Game Canonicalize(const Game& game);

}  // namespace pte

template <typename Tag>
struct std::hash<pte::StrongId<Tag>> {
  std::size_t operator()(pte::StrongId<Tag> id) const noexcept {
    return std::hash<int>()(id.value());
  }
};

#endif  // PTE_GAME_H_
