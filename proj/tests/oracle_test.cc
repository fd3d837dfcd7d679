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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pte/error.h"
#include "pte/io.h"
#include "pte/oracle.h"
#include "pte/solver.h"
#include "test_util.h"

namespace pte {
namespace {

using testing::NameSet;
using testing::PdGame;
using testing::PdMatrix;

Game SingleChoice(std::vector<Number> payoffs) {
  Game g;
  const PlayerId p = g.AddPlayer("P");
  const VertexId root = g.AddNode("root", p, "I");
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    const ActionId a = g.AddAction("a" + std::to_string(i));
    g.AddMove(root, a, g.AddOutcome("z" + std::to_string(i), {payoffs[i]}));
  }
  g.SetRoot(root);
  return g;
}

TEST_CASE("pareto frontier") {
  const Game pd = PdGame();
  CHECK(NameSet(pd, ParetoFrontier(pd)) ==
        std::set<std::string>{"C,c", "C,d", "D,c"});
  const Game one = SingleChoice({4});
  CHECK(ParetoFrontier(one).size() == 1);
  const Game flat = SingleChoice({2, 2, 2});
  CHECK(ParetoFrontier(flat).size() == 3);
  const Game chain = SingleChoice({1, 3, 2});
  CHECK(NameSet(chain, ParetoFrontier(chain)) == std::set<std::string>{"z1"});
}

TEST_CASE("normal form maximin") {
  const NormalForm pd = PdMatrix();
  CHECK(NormalFormMaximin(pd, 0) == Number(1));
  CHECK(NormalFormMaximin(pd, 1) == Number(1));

  NormalForm row;
  row.players = {"Solo"};
  row.actions = {{"x", "y", "z"}};
  row.payoffs[{"x"}] = {2};
  row.payoffs[{"y"}] = {9};
  row.payoffs[{"z"}] = {4};
  CHECK(NormalFormMaximin(row, 0) == Number(9));

  NormalForm flat = PdMatrix();
  for (auto& [profile, payoffs] : flat.payoffs) payoffs = {7, 7};
  CHECK(NormalFormMaximin(flat, 0) == Number(7));
  CHECK(NormalFormMaximin(flat, 1) == Number(7));

  try {
    NormalFormMaximin(pd, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kLookup);
  }
}

TEST_CASE("naive solve agrees on known games") {
  const Game pd = PdGame();
  const SolveResult naive = NaiveSolve(pd);
  CHECK(naive == Solve(pd));
  CHECK(NameSet(pd, naive.fixpoint) == std::set<std::string>{"C,c"});
  const Game st = BuildGame(testing::SpacetimeFixture());
  CHECK(NaiveSolve(st) == Solve(st));
}

TEST_CASE("naive solve rejects non-canonical games") {
  Game g;
  const PlayerId p = g.AddPlayer("P");
  const ActionId l = g.AddAction("L");
  const ActionId r = g.AddAction("R");
  const VertexId root = g.AddNode("r", p, "X");
  const VertexId n = g.AddNode("n", p, "X");
  g.AddMove(root, l, n);
  g.AddMove(root, r, g.AddOutcome("z3", {3}));
  g.AddMove(n, l, g.AddOutcome("z1", {1}));
  g.AddMove(n, r, g.AddOutcome("z2", {2}));
  g.SetRoot(root);
  try {
    NaiveSolve(g);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrecondition);
  }
}

TEST_CASE("naive solve agrees on 500 random games") {
  const GameShape shapes[] = {GameShape::kNormalForm, GameShape::kPerfectInfo,
                              GameShape::kGeneralImperfect,
                              GameShape::kSpacetime};
  for (int i = 0; i < 500; ++i) {
    GeneratorParams params;
    params.seed = 31337 + i;
    params.shape = shapes[i % 4];
    params.no_ties = (i % 5 != 0);  // a few games with ties as well
    const Game g = RandomGame(params);
    CAPTURE(i);
    CHECK(g.outcomes().size() <= 20);
    CHECK(Solve(g) == NaiveSolve(g));
  }
}

TEST_CASE("generators") {
  GeneratorParams params;
  params.seed = 42;
  for (GameShape shape : {GameShape::kNormalForm, GameShape::kPerfectInfo,
                          GameShape::kGeneralImperfect,
                          GameShape::kSpacetime}) {
    CAPTURE(GameShapeName(shape));
    params.shape = shape;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      params.seed = seed;
      const Game a = RandomGame(params);
      CHECK(a == RandomGame(params));
      const ValidationReport report = ValidateGame(a);
      CHECK(report.ok());
      CHECK(report.is_canonical);
      CHECK_FALSE(report.has_ties);
      CHECK(a.outcomes().size() <= 20);
      if (shape == GameShape::kPerfectInfo) {
        for (int c = 0; c < a.num_infosets(); ++c) {
          CHECK(a.InfosetMembers(InfosetId(c)).size() == 1);
        }
      }
      if (shape == GameShape::kNormalForm) {
        // One cell per player, each spanning a whole depth level.
        CHECK(a.num_infosets() == a.num_players());
        CHECK(report.has_perfect_recall);
      }
    }
  }
  // Distinct seeds give distinct games, at least usually.
  params.shape = GameShape::kGeneralImperfect;
  params.seed = 1;
  const Game first = RandomGame(params);
  params.seed = 2;
  CHECK_FALSE(first == RandomGame(params));

  params.max_players = 0;
  try {
    RandomGame(params);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kGeneration);
  }
}

TEST_CASE("generator bounds are honoured") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.max_players = 2;
    params.max_actions = 2;
    params.max_outcomes = 6;
    params.max_depth = 3;
    for (GameShape shape : {GameShape::kNormalForm, GameShape::kPerfectInfo,
                            GameShape::kGeneralImperfect}) {
      params.shape = shape;
      const Game g = RandomGame(params);
      CHECK(g.num_players() <= 2);
      CHECK(g.outcomes().size() <= 6);
      for (VertexId n : g.choice_nodes()) CHECK(g.Moves(n).size() <= 2);
    }
  }
}

TEST_CASE("non-canonical generator option") {
  int needs_pruning = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.canonical = false;
    const Game g = RandomGame(params);
    CHECK(ValidateGame(g).ok());
    if (!IsCanonical(g)) ++needs_pruning;
  }
  CHECK(needs_pruning > 10);
}

TEST_CASE("shape names") {
  for (GameShape shape : {GameShape::kNormalForm, GameShape::kPerfectInfo,
                          GameShape::kGeneralImperfect,
                          GameShape::kSpacetime}) {
    CHECK(ParseGameShape(GameShapeName(shape)) == shape);
  }
  CHECK_FALSE(ParseGameShape("mixed").has_value());
}

TEST_CASE("matrix screen matches the solver") {
  std::mt19937_64 rng(7);
  int empties = 0;
  for (int i = 0; i < 2000; ++i) {
    const int rows = 1 + static_cast<int>(rng() % 3);
    const int cols = 1 + static_cast<int>(rng() % 3);
    std::vector<int> u(rows * cols);
    std::vector<int> v(rows * cols);
    std::iota(u.begin(), u.end(), 1);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(u.begin(), u.end(), rng);
    std::shuffle(v.begin(), v.end(), rng);
    NormalForm m;
    m.players = {"R", "C"};
    m.actions.resize(2);
    for (int r = 0; r < rows; ++r) m.actions[0].push_back("r" + std::to_string(r));
    for (int c = 0; c < cols; ++c) m.actions[1].push_back("c" + std::to_string(c));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        m.payoffs[{m.actions[0][r], m.actions[1][c]}] = {u[r * cols + c],
                                                         v[r * cols + c]};
      }
    }
    const bool empty = Solve(EmbedNormalForm(m)).status == SolveStatus::kEmpty;
    CHECK(MatrixEliminationEmpties(rows, cols, u, v) == empty);
    empties += empty;
  }
  CHECK(empties > 0);
}

TEST_CASE("empty equilibrium search") {
  SUBCASE("default range finds the committed 2x2 witness") {
    const auto w = SearchEmptyPte({});
    REQUIRE(w.has_value());
    CHECK(w->matrix.actions[0].size() == 2);
    CHECK(w->matrix.actions[1].size() == 2);
    CHECK_FALSE(HasTies(w->game));
    CHECK(NaiveSolve(w->game).status == SolveStatus::kEmpty);
    CHECK(SerializeGame(w->game) ==
          testing::ReadFile(testing::FixturePath("empty_pte_2x2.json")));
  }
  SUBCASE("3x3 only finds the committed 3x3 witness") {
    SearchParams params;
    params.min_rows = params.min_cols = 3;
    const auto w = SearchEmptyPte(params);
    REQUIRE(w.has_value());
    CHECK(w->game.outcomes().size() == 9);
    CHECK(NaiveSolve(w->game).status == SolveStatus::kEmpty);
    CHECK(SerializeGame(w->game) ==
          testing::ReadFile(testing::FixturePath("empty_pte_3x3.json")));
  }
  SUBCASE("1x1 has none") {
    SearchParams params;
    params.max_rows = params.max_cols = 1;
    CHECK_FALSE(SearchEmptyPte(params).has_value());
  }
  SUBCASE("symmetric prisoners dilemma orderings have none") {
    SearchParams params;
    params.min_rows = params.min_cols = 2;
    params.max_rows = params.max_cols = 2;
    params.symmetric = true;
    auto is_pd = [](const NormalForm& m) {
      // Some labelling (c, d) of the row actions gives T > R > P > S.
      auto u = [&](int r, int c) {
        return m.payoffs.at({m.actions[0][r], m.actions[1][c]})[0];
      };
      for (int c = 0; c < 2; ++c) {
        const int d = 1 - c;
        if (u(d, c) > u(c, c) && u(c, c) > u(d, d) && u(d, d) > u(c, d)) {
          return true;
        }
      }
      return false;
    };
    params.accept = is_pd;
    CHECK_FALSE(SearchEmptyPte(params).has_value());

    // The restricted space is not vacuous: every such game has a unique
    // equilibrium.
    std::vector<int> u = {1, 2, 3, 4};
    int pd_games = 0;
    do {
      NormalForm m;
      m.players = {"Row", "Col"};
      m.actions = {{"r0", "r1"}, {"c0", "c1"}};
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          m.payoffs[{m.actions[0][r], m.actions[1][c]}] = {u[r * 2 + c],
                                                           u[c * 2 + r]};
        }
      }
      if (!is_pd(m)) continue;
      ++pd_games;
      CHECK(Solve(EmbedNormalForm(m)).status == SolveStatus::kUnique);
    } while (std::next_permutation(u.begin(), u.end()));
    CHECK(pd_games == 2);
  }
}

}  // namespace
}  // namespace pte
