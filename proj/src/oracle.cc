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

#include "pte/oracle.h"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "pte/error.h"
#include "pte/solver.h"

namespace pte {

// ---------------------------------------------------------------------------
// Reference computations.

std::vector<VertexId> ParetoFrontier(const Game& game) {
  std::vector<VertexId> frontier;
  for (VertexId z : game.outcomes()) {
    const auto uz = game.Payoffs(z);
    bool dominated = false;
    for (VertexId w : game.outcomes()) {
      if (w == z) continue;
      const auto uw = game.Payoffs(w);
      bool weakly_better = true;
      bool strictly_somewhere = false;
      for (std::size_t p = 0; p < uz.size(); ++p) {
        if (uw[p] < uz[p]) weakly_better = false;
        if (uw[p] > uz[p]) strictly_somewhere = true;
      }
      if (weakly_better && strictly_somewhere) {
        dominated = true;
        break;
      }
    }
    if (!dominated) frontier.push_back(z);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

Number NormalFormMaximin(const NormalForm& matrix, int player) {
  if (player < 0 || player >= static_cast<int>(matrix.players.size())) {
    throw Error(ErrorKind::kLookup, "no such player in matrix");
  }
  std::optional<Number> best;
  for (const std::string& own : matrix.actions[player]) {
    std::optional<Number> worst;
    for (const auto& [profile, payoffs] : matrix.payoffs) {
      if (profile[player] != own) continue;
      if (!worst || payoffs[player] < *worst) worst = payoffs[player];
    }
    if (!worst) {
      throw Error(ErrorKind::kInput, "matrix has no profile for action '" +
                                         own + "'");
    }
    if (!best || *worst > *best) best = worst;
  }
  return *best;
}

namespace {

// A root-to-outcome path: the choice nodes visited and the action taken at
// each.
struct Path {
  std::vector<std::pair<VertexId, ActionId>> edges;
};

std::map<VertexId, Path> EnumeratePaths(const Game& game) {
  std::map<VertexId, Path> paths;
  Path current;
  auto walk = [&](auto&& self, VertexId v) -> void {
    if (game.IsOutcome(v)) {
      paths[v] = current;
      return;
    }
    for (const Move& m : game.Moves(v)) {
      current.edges.emplace_back(v, m.action);
      self(self, m.child);
      current.edges.pop_back();
    }
  };
  walk(walk, game.root());
  return paths;
}

}  // namespace

SolveResult NaiveSolve(const Game& game) {
  const ValidationReport report = ValidateGame(game);
  if (!report.ok()) {
    throw Error(ErrorKind::kPrecondition,
                "invalid game: " + report.errors.front().code);
  }
  const std::map<VertexId, Path> paths = EnumeratePaths(game);

  // Canonical iff no root-to-outcome path meets a cell twice.
  for (const auto& [z, path] : paths) {
    std::set<InfosetId> seen;
    for (const auto& [node, action] : path.edges) {
      if (!seen.insert(game.InfosetOf(node)).second) {
        throw Error(ErrorKind::kPrecondition,
                    "game is not canonical: infoset '" +
                        game.InfosetLabel(game.InfosetOf(node)) +
                        "' repeats on the path to '" + game.VertexName(z) +
                        "'");
      }
    }
  }

  auto passes_through = [&](VertexId z, InfosetId cell) {
    for (const auto& [node, action] : paths.at(z).edges) {
      if (game.InfosetOf(node) == cell) return true;
    }
    return false;
  };
  auto takes = [&](VertexId z, InfosetId cell, ActionId a) {
    for (const auto& [node, action] : paths.at(z).edges) {
      if (game.InfosetOf(node) == cell && action == a) return true;
    }
    return false;
  };

  SolveResult result;
  for (int p = 0; p < game.num_players() && !result.has_ties; ++p) {
    for (std::size_t i = 0; i < game.outcomes().size(); ++i) {
      for (std::size_t j = i + 1; j < game.outcomes().size(); ++j) {
        if (game.Payoff(PlayerId(p), game.outcomes()[i]) ==
            game.Payoff(PlayerId(p), game.outcomes()[j])) {
          result.has_ties = true;
        }
      }
    }
  }

  std::set<VertexId> surviving(game.outcomes().begin(), game.outcomes().end());
  for (int step = 0;; ++step) {
    SolverState state;
    state.step = step;
    state.surviving.assign(surviving.begin(), surviving.end());

    for (int c = 0; c < game.num_infosets(); ++c) {
      const InfosetId cell(c);
      bool all = true;
      for (VertexId z : surviving) all = all && passes_through(z, cell);
      if (all) state.reached.push_back(cell);
    }

    std::set<VertexId> preempted;
    for (InfosetId cell : state.reached) {
      const VertexId first = game.InfosetMembers(cell).front();
      const PlayerId owner = game.PlayerAt(first);
      std::optional<Number> best;
      ActionId best_action;
      for (const Move& m : game.Moves(first)) {
        std::optional<Number> worst;
        for (VertexId z : surviving) {
          if (!takes(z, cell, m.action)) continue;
          const Number& u = game.Payoff(owner, z);
          if (!worst || u < *worst) worst = u;
        }
        if (worst && (!best || *worst > *best)) {
          best = worst;
          best_action = m.action;
        }
      }
      if (!best) {
        throw Error(ErrorKind::kInternal, "reached cell without survivors");
      }
      state.maximins.push_back({cell, owner, *best, best_action});
    }
    for (VertexId z : surviving) {
      for (const MaximinRecord& record : state.maximins) {
        if (game.Payoff(record.player, z) < record.value) {
          state.preemptions.push_back({z, record.player, record.infoset});
          preempted.insert(z);
        }
      }
    }
    state.preempted.assign(preempted.begin(), preempted.end());
    result.steps.push_back(state);

    if (preempted.empty()) break;
    std::set<VertexId> next;
    std::set_difference(surviving.begin(), surviving.end(), preempted.begin(),
                        preempted.end(), std::inserter(next, next.end()));
    if (next.empty()) {
      result.last_nonempty.assign(surviving.begin(), surviving.end());
      result.eliminating_step = step;
    }
    surviving = std::move(next);
    if (surviving.empty()) break;
  }

  result.fixpoint.assign(surviving.begin(), surviving.end());
  result.status = result.fixpoint.size() == 1 ? SolveStatus::kUnique
                  : result.fixpoint.empty()   ? SolveStatus::kEmpty
                                              : SolveStatus::kMultipleWithTies;
  return result;
}

// ---------------------------------------------------------------------------
// Generators.

std::string_view GameShapeName(GameShape shape) {
  switch (shape) {
    case GameShape::kNormalForm:
      return "normal_form";
    case GameShape::kPerfectInfo:
      return "perfect_info";
    case GameShape::kGeneralImperfect:
      return "general_imperfect";
    case GameShape::kSpacetime:
      return "spacetime";
  }
  return "unknown";
}

std::optional<GameShape> ParseGameShape(std::string_view name) {
  for (GameShape s : {GameShape::kNormalForm, GameShape::kPerfectInfo,
                      GameShape::kGeneralImperfect, GameShape::kSpacetime}) {
    if (GameShapeName(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

using Rng = std::mt19937_64;

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

void CheckParams(const GeneratorParams& params) {
  if (params.max_players < 1 || params.max_depth < 1 ||
      params.max_actions < 1 || params.max_outcomes < 1) {
    throw Error(ErrorKind::kGeneration, "generator bounds must be positive");
  }
}

// One payoff column per player: a permutation of 1..n without ties, small
// integers with ties otherwise.
std::vector<std::vector<Number>> RandomPayoffs(Rng& rng, int players, int n,
                                               bool no_ties) {
  std::vector<std::vector<Number>> by_outcome(n);
  for (int p = 0; p < players; ++p) {
    std::vector<int> values(n);
    if (no_ties) {
      std::iota(values.begin(), values.end(), 1);
      std::shuffle(values.begin(), values.end(), rng);
    } else {
      for (int& v : values) v = Uniform(rng, 1, std::max(2, n / 2));
    }
    for (int i = 0; i < n; ++i) by_outcome[i].emplace_back(values[i]);
  }
  return by_outcome;
}

struct ShapeNode {
  int parent = -1;
  int depth = 0;
  std::vector<int> children;
  bool leaf = true;
};

// Random tree with at most max_outcomes leaves and the given depth bound.
std::vector<ShapeNode> RandomShape(Rng& rng, const GeneratorParams& params) {
  std::vector<ShapeNode> tree(1);
  if (params.max_outcomes < 2) return tree;
  int leaves = 1;
  auto expand = [&](int v) {
    int arity = Coin(rng, 0.1) ? 1 : Uniform(rng, std::min(2, params.max_actions),
                                               params.max_actions);
    arity = std::min(arity, params.max_outcomes - leaves + 1);
    tree[v].leaf = false;
    --leaves;
    for (int i = 0; i < arity; ++i) {
      tree[v].children.push_back(static_cast<int>(tree.size()));
      tree.push_back({v, tree[v].depth + 1, {}, true});
      ++leaves;
    }
  };
  expand(0);
  const int expansions = Uniform(rng, 0, 2 * params.max_outcomes);
  for (int i = 0; i < expansions; ++i) {
    std::vector<int> candidates;
    for (int v = 0; v < static_cast<int>(tree.size()); ++v) {
      if (tree[v].leaf && tree[v].depth < params.max_depth) {
        candidates.push_back(v);
      }
    }
    if (candidates.empty() || leaves >= params.max_outcomes) break;
    expand(candidates[Uniform(rng, 0, static_cast<int>(candidates.size()) - 1)]);
  }
  return tree;
}

bool IsAncestor(const std::vector<ShapeNode>& tree, int a, int b) {
  for (int v = tree[b].parent; v >= 0; v = tree[v].parent) {
    if (v == a) return true;
  }
  return false;
}

Game TreeGame(Rng& rng, const GeneratorParams& params, bool singleton_cells) {
  const std::vector<ShapeNode> tree = RandomShape(rng, params);
  const int players = Uniform(rng, 1, params.max_players);
  const int n = static_cast<int>(tree.size());

  std::vector<int> owner(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!tree[v].leaf) owner[v] = Uniform(rng, 0, players - 1);
  }

  // Cell assignment: every node starts alone; others may join a compatible
  // cell (same owner, same arity).
  std::vector<int> cell(n, -1);
  std::vector<std::vector<int>> cells;
  std::vector<int> visit;
  for (int v = 0; v < n; ++v) {
    if (!tree[v].leaf) visit.push_back(v);
  }
  std::shuffle(visit.begin(), visit.end(), rng);
  for (int v : visit) {
    if (!singleton_cells) {
      std::vector<int> options;
      for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
        const int head = cells[c].front();
        if (owner[head] != owner[v] ||
            tree[head].children.size() != tree[v].children.size()) {
          continue;
        }
        bool related = false;
        for (int m : cells[c]) {
          related = related || IsAncestor(tree, m, v) || IsAncestor(tree, v, m);
        }
        if (!related) {
          options.push_back(c);
        } else if (!params.canonical) {
          options.push_back(c);
          options.push_back(c);  // favour non-canonical merges
        }
      }
      if (!options.empty() && Coin(rng, 0.6)) {
        const int c = options[Uniform(rng, 0, static_cast<int>(options.size()) - 1)];
        cells[c].push_back(v);
        cell[v] = c;
        continue;
      }
    }
    cell[v] = static_cast<int>(cells.size());
    cells.push_back({v});
  }

  int leaves = 0;
  for (const ShapeNode& s : tree) leaves += s.leaf ? 1 : 0;
  const auto payoffs = RandomPayoffs(rng, players, leaves, params.no_ties);

  Game game;
  for (int p = 0; p < players; ++p) game.AddPlayer("P" + std::to_string(p));
  for (int a = 0; a < params.max_actions; ++a) {
    game.AddAction("a" + std::to_string(a));
  }
  std::vector<VertexId> ids(n);
  int node_count = 0;
  int outcome_count = 0;
  auto emit = [&](auto&& self, int v) -> void {
    if (tree[v].leaf) {
      ids[v] = game.AddOutcome("z" + std::to_string(outcome_count),
                               payoffs[outcome_count]);
      ++outcome_count;
      return;
    }
    ids[v] = game.AddNode("n" + std::to_string(node_count++),
                          PlayerId(owner[v]), "I" + std::to_string(cell[v]));
    for (int child : tree[v].children) self(self, child);
  };
  emit(emit, 0);
  for (int v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < tree[v].children.size(); ++i) {
      game.AddMove(ids[v], ActionId(static_cast<int>(i)),
                   ids[tree[v].children[i]]);
    }
  }
  game.SetRoot(ids[0]);
  return game;
}

}  // namespace

NormalForm RandomNormalForm(const GeneratorParams& params) {
  CheckParams(params);
  Rng rng(params.seed);
  const int players = Uniform(rng, 1, params.max_players);
  NormalForm matrix;
  int product = 1;
  for (int p = 0; p < players; ++p) {
    matrix.players.push_back("P" + std::to_string(p));
    const int room = std::max(1, params.max_outcomes / product);
    const int count = Uniform(rng, 1, std::min(params.max_actions, room));
    product *= count;
    std::vector<std::string> actions;
    for (int a = 0; a < count; ++a) {
      actions.push_back(std::string(1, static_cast<char>('a' + p % 26)) +
                        std::to_string(a));
    }
    matrix.actions.push_back(std::move(actions));
  }
  const auto profiles = matrix.Profiles();
  const auto payoffs = RandomPayoffs(rng, players,
                                     static_cast<int>(profiles.size()),
                                     params.no_ties);
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    matrix.payoffs[profiles[i]] = payoffs[i];
  }
  return matrix;
}

SpacetimeSetup RandomSetup(const GeneratorParams& params) {
  CheckParams(params);
  Rng rng(params.seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SpacetimeSetup setup;
    setup.dimension = Uniform(rng, 2, 3);
    const int agents = Uniform(rng, 1, params.max_players);
    for (int i = 0; i < agents; ++i) setup.agents.push_back("A" + std::to_string(i));
    const int points = Uniform(rng, 1, std::min(params.max_depth, 8));
    int label = 1;
    for (int i = 0; i < points; ++i) {
      DecisionPoint p;
      p.id = "p" + std::to_string(i);
      p.agent = setup.agents[Uniform(rng, 0, agents - 1)];
      for (int d = 0; d + 1 < setup.dimension; ++d) {
        p.coords.emplace_back(Uniform(rng, 0, 4));
      }
      p.coords.emplace_back(Uniform(rng, 0, 6));
      const int k = Uniform(rng, 1, params.max_actions);
      for (int j = 0; j < k; ++j) {
        p.actions.push_back(std::to_string(label++));
        setup.actions.push_back(p.actions.back());
      }
      setup.points.push_back(std::move(p));
    }

    // Fill the contingency rows so that all three constraints hold: a point
    // in the causal past whose own row agrees gets a random action.
    const std::vector<int> order = TotalOrder(setup);
    const CausalDag dag = BuildCausalDag(setup);
    std::vector<std::vector<Slot>> rows(points);
    for (int k = 0; k < points; ++k) {
      rows[k].assign(k, Slot());
      for (int l = 0; l < k; ++l) {
        bool compatible = true;
        for (int m = 0; m < l; ++m) {
          if (rows[l][m] && rows[l][m] != rows[k][m]) compatible = false;
        }
        if (compatible && dag.Precedes(order[l], order[k])) {
          const auto& acts = setup.points[order[l]].actions;
          rows[k][l] = acts[Uniform(rng, 0, static_cast<int>(acts.size()) - 1)];
          setup.contingency[setup.points[order[k]].id]
                           [setup.points[order[l]].id] = *rows[k][l];
        }
      }
    }

    const HistorySets sets = EnumerateHistories(setup);
    const int n = static_cast<int>(sets.complete.size());
    if (n > params.max_outcomes) continue;
    const auto payoffs = RandomPayoffs(rng, agents, n, params.no_ties);
    for (int i = 0; i < n; ++i) {
      auto& row = setup.utilities[HistoryKey(sets.complete[i])];
      for (int a = 0; a < agents; ++a) row[setup.agents[a]] = payoffs[i][a];
    }
    return setup;
  }
  throw Error(ErrorKind::kGeneration,
              "could not fit a spacetime setup under max_outcomes");
}

Game RandomGame(const GeneratorParams& params) {
  CheckParams(params);
  switch (params.shape) {
    case GameShape::kNormalForm:
      return EmbedNormalForm(RandomNormalForm(params));
    case GameShape::kSpacetime:
      return BuildGame(RandomSetup(params));
    case GameShape::kPerfectInfo: {
      Rng rng(params.seed);
      return TreeGame(rng, params, /*singleton_cells=*/true);
    }
    case GameShape::kGeneralImperfect: {
      Rng rng(params.seed);
      return TreeGame(rng, params, /*singleton_cells=*/false);
    }
  }
  throw Error(ErrorKind::kGeneration, "unknown shape");
}

// ---------------------------------------------------------------------------
// Nonexistence search.

namespace {

NormalForm MakeMatrix(int rows, int cols, const std::vector<int>& row_payoff,
                      const std::vector<int>& col_payoff) {
  NormalForm m;
  m.players = {"Row", "Col"};
  m.actions.resize(2);
  for (int r = 0; r < rows; ++r) m.actions[0].push_back("r" + std::to_string(r));
  for (int c = 0; c < cols; ++c) m.actions[1].push_back("c" + std::to_string(c));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m.payoffs[{m.actions[0][r], m.actions[1][c]}] = {
          Number(row_payoff[r * cols + c]), Number(col_payoff[r * cols + c])};
    }
  }
  return m;
}

}  // namespace

// In a two-player matrix game both cells are reached at every step, so the
// elimination reduces to row and column maximins over the surviving cells.
bool MatrixEliminationEmpties(int rows, int cols,
                              const std::vector<int>& row_payoff,
                              const std::vector<int>& col_payoff) {
  const int n = rows * cols;
  std::vector<char> alive(n, 1);
  int left = n;
  while (true) {
    int row_best = INT_MIN;
    for (int r = 0; r < rows; ++r) {
      int worst = INT_MAX;
      for (int c = 0; c < cols; ++c) {
        const int z = r * cols + c;
        if (alive[z]) worst = std::min(worst, row_payoff[z]);
      }
      if (worst != INT_MAX) row_best = std::max(row_best, worst);
    }
    int col_best = INT_MIN;
    for (int c = 0; c < cols; ++c) {
      int worst = INT_MAX;
      for (int r = 0; r < rows; ++r) {
        const int z = r * cols + c;
        if (alive[z]) worst = std::min(worst, col_payoff[z]);
      }
      if (worst != INT_MAX) col_best = std::max(col_best, worst);
    }
    std::vector<int> doomed;
    for (int z = 0; z < n; ++z) {
      if (alive[z] &&
          (row_payoff[z] < row_best || col_payoff[z] < col_best)) {
        doomed.push_back(z);
      }
    }
    if (doomed.empty()) return false;
    for (int z : doomed) alive[z] = 0;
    left -= static_cast<int>(doomed.size());
    if (left == 0) return true;
  }
}

namespace {

std::optional<EmptyPteWitness> Check(int rows, int cols,
                                     const std::vector<int>& row_payoff,
                                     const std::vector<int>& col_payoff,
                                     const SearchParams& params) {
  if (!MatrixEliminationEmpties(rows, cols, row_payoff, col_payoff)) {
    return std::nullopt;
  }
  NormalForm matrix = MakeMatrix(rows, cols, row_payoff, col_payoff);
  if (params.accept && !params.accept(matrix)) return std::nullopt;
  Game game = EmbedNormalForm(matrix);
  if (Solve(game).status != SolveStatus::kEmpty) return std::nullopt;
  if (NaiveSolve(game).status != SolveStatus::kEmpty) {
    throw Error(ErrorKind::kInternal,
                "solver and reference disagree on an empty equilibrium");
  }
  return EmptyPteWitness{std::move(matrix), std::move(game)};
}

}  // namespace

std::optional<EmptyPteWitness> SearchEmptyPte(const SearchParams& params) {
  for (int rows = std::max(1, params.min_rows); rows <= params.max_rows;
       ++rows) {
    for (int cols = std::max(1, params.min_cols); cols <= params.max_cols;
         ++cols) {
      if (params.symmetric && rows != cols) continue;
      const int n = rows * cols;
      std::vector<int> row_payoff(n);
      std::iota(row_payoff.begin(), row_payoff.end(), 1);
      do {
        if (params.symmetric) {
          std::vector<int> col_payoff(n);
          for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
              col_payoff[r * cols + c] = row_payoff[c * cols + r];
            }
          }
          if (auto w = Check(rows, cols, row_payoff, col_payoff, params)) {
            return w;
          }
          continue;
        }
        std::vector<int> col_payoff(n);
        std::iota(col_payoff.begin(), col_payoff.end(), 1);
        do {
          if (auto w = Check(rows, cols, row_payoff, col_payoff, params)) {
            return w;
          }
        } while (std::next_permutation(col_payoff.begin(), col_payoff.end()));
      } while (std::next_permutation(row_payoff.begin(), row_payoff.end()));
    }
  }
  return std::nullopt;
}

}  // namespace pte
