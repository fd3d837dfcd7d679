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

#ifndef PTE_SOLVER_H_
#define PTE_SOLVER_H_

// Perfectly Transparent Equilibrium by forward-induction outcome elimination.
//
// Starting from all outcomes, each round determines the cells that every
// surviving outcome passes through (the reached cells). At each reached cell
// the owner's maximin is the best, over actions leading to some survivor, of
// the worst surviving payoff under that action. Every survivor paying some
// reached cell's owner strictly less than that maximin is removed, all at
// once. Rounds repeat until nothing is removed or nothing survives.
//
// Without payoff ties at most one outcome survives, and it is Pareto optimal.

#include <vector>

#include "pte/game.h"
#include "pte/trace.h"

namespace pte {

// Cells whose descendants include every outcome of `surviving`. Throws
// Error(kDomain) when `surviving` is empty.
std::vector<InfosetId> ReachedInfosets(const Game& game,
                                       const std::vector<VertexId>& surviving);

// Maximin of the cell's owner over the surviving outcomes. Throws
// Error(kInternal) when no action of the cell leads to a survivor.
MaximinRecord Maximin(const Game& game, const std::vector<VertexId>& surviving,
                      InfosetId cell);

// Survivors below some reached cell's maximin.
std::vector<VertexId> Preempted(const Game& game,
                                const std::vector<VertexId>& surviving,
                                const std::vector<InfosetId>& reached);

// Runs the elimination to its fixpoint. Throws Error(kPrecondition), naming a
// violating cell, if the game is invalid or not canonical.
SolveResult Solve(const Game& game);

}  // namespace pte

#endif  // PTE_SOLVER_H_
