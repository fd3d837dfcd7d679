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

#ifndef PTE_TRACE_H_
#define PTE_TRACE_H_

// Result types of the elimination procedure. These are plain data shared by
// the solver and the brute-force reference implementation so that the two can
// be compared field by field.

#include <string_view>
#include <vector>

#include "pte/game.h"
#include "pte/number.h"

namespace pte {

struct MaximinRecord {
  InfosetId infoset;
  PlayerId player;
  Number value;
  ActionId action;  // first maximizing action in declaration order

  friend bool operator==(const MaximinRecord&, const MaximinRecord&) = default;
};

struct Preemption {
  VertexId outcome;
  PlayerId player;
  InfosetId infoset;

  friend bool operator==(const Preemption&, const Preemption&) = default;
};

// One round of elimination. All vectors are sorted by id; `preemptions`
// lists every (outcome, reached cell) pair at which the outcome falls below
// the owner's maximin, sorted by outcome then cell.
struct SolverState {
  int step = 0;
  std::vector<VertexId> surviving;
  std::vector<InfosetId> reached;
  std::vector<MaximinRecord> maximins;
  std::vector<VertexId> preempted;
  std::vector<Preemption> preemptions;

  friend bool operator==(const SolverState&, const SolverState&) = default;
};

enum class SolveStatus { kUnique, kEmpty, kMultipleWithTies };

std::string_view SolveStatusName(SolveStatus status);

struct SolveResult {
  std::vector<VertexId> fixpoint;
  // One snapshot per evaluated round; the last one has no preemptions unless
  // it eliminated every remaining outcome.
  std::vector<SolverState> steps;
  bool has_ties = false;
  SolveStatus status = SolveStatus::kEmpty;
  // Only meaningful when the fixpoint is empty: the surviving set before the
  // round that emptied it, and that round's step number.
  std::vector<VertexId> last_nonempty;
  int eliminating_step = -1;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

}  // namespace pte

#endif  // PTE_TRACE_H_
