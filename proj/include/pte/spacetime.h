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

#ifndef PTE_SPACETIME_H_
#define PTE_SPACETIME_H_

// Games generated by agents deciding at points of Minkowski spacetime.
//
// Each decision point has exact coordinates (space first, time last) under a
// metric of signature (n-1, 1). Timelike separation gives a partial causal
// order; a deterministic linear extension of it fixes the positions of the
// points. Contingency rows state which earlier actions must have been taken
// for a point to be reached. Histories assign an action or ⊥ to every
// position, and the consistent ones become the nodes and outcomes of an
// extensive-form game whose information sets are the decision points.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pte/game.h"
#include "pte/number.h"

namespace pte {

struct DecisionPoint {
  std::string id;
  std::string agent;
  std::vector<Number> coords;
  std::vector<std::string> actions;
};

struct SpacetimeSetup {
  int dimension = 0;
  std::vector<std::string> agents;
  std::vector<std::string> actions;
  std::vector<DecisionPoint> points;
  // point id -> earlier point id -> required action. Absent entries are ⊥.
  std::map<std::string, std::map<std::string, std::string>> contingency;
  // history key -> agent -> payoff, for every consistent complete history.
  std::map<std::string, std::map<std::string, Number>> utilities;
};

// An action label, or nullopt for ⊥.
using Slot = std::optional<std::string>;
// Assignment to the first size() positions of the total order.
using History = std::vector<Slot>;

// "2,_,5,7,10,11"; the empty history is "∅".
std::string HistoryKey(const History& history);
History ParseHistoryKey(const std::string& key);

enum class CausalRelation {
  kColocated,  // Same event; treated as spacelike.
  kSpacelike,
  kPrecedes,   // First argument is in the causal past of the second.
  kFollows,
};

// Classifies q - p by the sign of the squared interval. Lightlike pairs count
// as timelike, ordered by time. Throws Error(kInput) on a length mismatch.
CausalRelation Separation(std::span<const Number> p, std::span<const Number> q,
                          int dimension);

// Timelike precedence between points, indexed like setup.points.
struct CausalDag {
  std::vector<std::vector<bool>> precedes;  // precedes[p][q]: p ≺ q
  std::vector<std::vector<int>> successors;

  bool Precedes(int p, int q) const { return precedes[p][q]; }
};
CausalDag BuildCausalDag(const SpacetimeSetup& setup);

// Topological order of the causal DAG (indices into setup.points). Ties break
// on time, then space coordinates lexicographically, then id, so co-located
// points end up adjacent.
std::vector<int> TotalOrder(const SpacetimeSetup& setup);

// Contingency rows laid out along the total order: rows[k][l] for l < k.
struct ContingencyTriangle {
  std::vector<int> order;
  std::vector<std::vector<Slot>> rows;

  int size() const { return static_cast<int>(order.size()); }
};
ContingencyTriangle BuildTriangle(const SpacetimeSetup& setup);

// Full check of a setup, in stages: structure (ids, agents, action subsets,
// coordinate lengths, labels representable in history keys), then the
// contingency triangle, then totality of the utilities over consistent
// complete histories. A stage runs only if the previous one passed.
ValidationReport ValidateSetup(const SpacetimeSetup& setup);

// The three contingency constraints, plus availability of every required
// action at the point it refers to.
ValidationReport ValidateTriangle(const SpacetimeSetup& setup);

// True iff every non-⊥ entry of row `position` equals the prefix's action at
// that position. Throws Error(kInput) unless prefix.size() == position.
bool Matches(const ContingencyTriangle& triangle, const History& prefix,
             int position);

struct HistorySets {
  std::vector<History> complete;
  std::vector<History> incomplete;  // each awaits a real decision
};
HistorySets EnumerateHistories(const SpacetimeSetup& setup);

// Appends `action` to a pending history, then ⊥ until the next matched point
// or the end. Throws Error(kDomain) if the history is not pending or the
// action is unavailable at the pending point.
History SuccessorHat(const SpacetimeSetup& setup, const History& incomplete,
                     const std::string& action);

// Nodes are the pending histories (ids are history keys), outcomes the
// complete ones, cells the decision points (labelled by point id).
// Throws Error(kPrecondition) if the setup, triangle or utilities are
// invalid.
Game BuildGame(const SpacetimeSetup& setup);

// True iff no agent owns two spacelike-separated or co-located points.
bool SpacelikeAgentCheck(const SpacetimeSetup& setup);

}  // namespace pte

#endif  // PTE_SPACETIME_H_
