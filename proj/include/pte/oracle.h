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

#ifndef PTE_ORACLE_H_
#define PTE_ORACLE_H_

// Reference implementations and generators for cross-checking the solver.
//
// Nothing here reuses solver code: NaiveSolve recomputes descendant sets from
// explicit root-to-outcome paths and evaluates preemption with plain loops,
// so agreement with Solve is evidence rather than tautology.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "pte/game.h"
#include "pte/normal_form.h"
#include "pte/number.h"
#include "pte/spacetime.h"
#include "pte/trace.h"

namespace pte {

// Outcomes that no other outcome weakly improves for every player with a
// strict improvement for at least one. Sorted by id.
std::vector<VertexId> ParetoFrontier(const Game& game);

// max over the player's actions of the min over everyone else's profiles.
Number NormalFormMaximin(const NormalForm& matrix, int player);

// Same contract and output as Solve, computed independently.
SolveResult NaiveSolve(const Game& game);

enum class GameShape { kNormalForm, kPerfectInfo, kGeneralImperfect, kSpacetime };

std::string_view GameShapeName(GameShape shape);
std::optional<GameShape> ParseGameShape(std::string_view name);

struct GeneratorParams {
  std::uint64_t seed = 0;
  int max_players = 3;
  int max_depth = 4;  // tree depth; number of decision points for kSpacetime
  int max_actions = 3;
  int max_outcomes = 20;
  bool no_ties = true;
  GameShape shape = GameShape::kGeneralImperfect;
  // kGeneralImperfect only: when false, cells may also merge a node with its
  // ancestors, so the result usually needs canonicalizing.
  bool canonical = true;
};

// Deterministic per params. Throws Error(kGeneration) on infeasible bounds.
Game RandomGame(const GeneratorParams& params);
NormalForm RandomNormalForm(const GeneratorParams& params);
SpacetimeSetup RandomSetup(const GeneratorParams& params);

// Elimination specialized to two-player matrices given as row-major payoff
// arrays. True iff every cell is eliminated. Used by the search as a cheap
// screen; each hit is then confirmed on the embedded game.
bool MatrixEliminationEmpties(int rows, int cols,
                              const std::vector<int>& row_payoff,
                              const std::vector<int>& col_payoff);

struct SearchParams {
  int min_rows = 1;
  int max_rows = 3;
  int min_cols = 1;
  int max_cols = 3;
  // Column payoffs mirror row payoffs: u_col(r, c) = u_row(c, r). Only square
  // sizes are searched.
  bool symmetric = false;
  // Optional restriction of the candidate space.
  std::function<bool(const NormalForm&)> accept;
};

struct EmptyPteWitness {
  NormalForm matrix;
  Game game;
};

// Two-player normal forms without ties, sizes in ascending (rows, cols)
// order, payoffs ranging over permutations of 1..rows*cols in lexicographic
// order (row player's permutation outermost). Returns the first game whose
// equilibrium is empty, re-checked with NaiveSolve.
std::optional<EmptyPteWitness> SearchEmptyPte(const SearchParams& params);

}  // namespace pte

#endif  // PTE_ORACLE_H_
