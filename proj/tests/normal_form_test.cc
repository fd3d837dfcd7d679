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

#include "pte/error.h"
#include "pte/normal_form.h"
#include "pte/oracle.h"
#include "test_util.h"

namespace pte {
namespace {

using testing::NameSet;
using testing::PdMatrix;

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::kInternal;
}

// Players move in order; player k's single cell holds one node per profile of
// the earlier players.
void CheckEmbeddingShape(const NormalForm& m, const Game& g) {
  std::size_t profiles = 1;
  for (std::size_t k = 0; k < m.players.size(); ++k) {
    const InfosetId cell = g.InfosetByLabel(m.players[k]);
    CHECK(g.InfosetMembers(cell).size() == profiles);
    CHECK(g.InfosetPlayer(cell) == PlayerId(static_cast<int>(k)));
    CHECK(g.InfosetActions(cell).size() == m.actions[k].size());
    profiles *= m.actions[k].size();
  }
  CHECK(g.outcomes().size() == profiles);
  CHECK(g.num_infosets() == static_cast<int>(m.players.size()));
  const ValidationReport report = ValidateGame(g);
  CHECK(report.ok());
  CHECK(report.is_canonical);
  CHECK(report.has_perfect_recall);
  for (const auto& profile : m.Profiles()) {
    std::string id;
    for (const std::string& a : profile) id += (id.empty() ? "" : ",") + a;
    const VertexId z = g.VertexByName(id);
    REQUIRE(g.IsOutcome(z));
    const auto payoffs = g.Payoffs(z);
    CHECK(std::vector<Number>(payoffs.begin(), payoffs.end()) ==
          m.payoffs.at(profile));
  }
}

TEST_CASE("prisoners dilemma embedding") {
  const NormalForm m = PdMatrix();
  const Game g = EmbedNormalForm(m);
  CHECK(g.choice_nodes().size() == 3);
  CHECK(g.VertexName(g.root()) == kEmptyHistoryId);
  CHECK(g.InfosetMembers(g.InfosetByLabel("Alice")).size() == 1);
  CHECK(NameSet(g, g.InfosetMembers(g.InfosetByLabel("Bob"))) ==
        std::set<std::string>{"C", "D"});
  CHECK(NameSet(g, g.outcomes()) ==
        std::set<std::string>{"C,c", "C,d", "D,c", "D,d"});
  CHECK(g.Payoff(g.PlayerByName("Bob"), g.VertexByName("C,d")) == Number(5));
  CheckEmbeddingShape(m, g);
}

TEST_CASE("profiles enumerate first player slowest") {
  const auto profiles = PdMatrix().Profiles();
  REQUIRE(profiles.size() == 4);
  CHECK(profiles[0] == std::vector<std::string>{"C", "c"});
  CHECK(profiles[1] == std::vector<std::string>{"C", "d"});
  CHECK(profiles[3] == std::vector<std::string>{"D", "d"});
}

TEST_CASE("one by one") {
  NormalForm m;
  m.players = {"A", "B"};
  m.actions = {{"x"}, {"y"}};
  m.payoffs[{"x", "y"}] = {1, 2};
  const Game g = EmbedNormalForm(m);
  CHECK(g.choice_nodes().size() == 2);
  CHECK(g.outcomes().size() == 1);
  CheckEmbeddingShape(m, g);
}

TEST_CASE("single player row") {
  NormalForm m;
  m.players = {"Solo"};
  m.actions = {{"a", "b", "c"}};
  m.payoffs[{"a"}] = {3};
  m.payoffs[{"b"}] = {1};
  m.payoffs[{"c"}] = {2};
  const Game g = EmbedNormalForm(m);
  CHECK(g.choice_nodes().size() == 1);
  CHECK(g.outcomes().size() == 3);
  CheckEmbeddingShape(m, g);
}

TEST_CASE("players may share action names") {
  NormalForm m;
  m.players = {"A", "B"};
  m.actions = {{"C", "D"}, {"C", "D"}};
  for (const auto& p : m.Profiles()) m.payoffs[p] = {1, 1};
  const Game g = EmbedNormalForm(m);
  CHECK(g.num_actions() == 2);
  CheckEmbeddingShape(m, g);
}

TEST_CASE("malformed matrices") {
  NormalForm m = PdMatrix();
  m.payoffs.erase({"D", "d"});
  CHECK(KindOf([&] { EmbedNormalForm(m); }) == ErrorKind::kInput);

  m = PdMatrix();
  m.payoffs[{"D", "d"}] = {1};
  CHECK(KindOf([&] { EmbedNormalForm(m); }) == ErrorKind::kInput);

  m = PdMatrix();
  m.actions[1].clear();
  CHECK(KindOf([&] { EmbedNormalForm(m); }) == ErrorKind::kInput);

  CHECK(KindOf([&] { EmbedNormalForm(NormalForm{}); }) == ErrorKind::kInput);

  m = PdMatrix();
  m.actions.pop_back();
  CHECK(KindOf([&] { EmbedNormalForm(m); }) == ErrorKind::kInput);
}

TEST_CASE("random matrices embed with the expected shape") {
  for (int i = 0; i < 100; ++i) {
    GeneratorParams params;
    params.seed = 77 + i;
    params.shape = GameShape::kNormalForm;
    params.max_outcomes = 27;
    const NormalForm m = RandomNormalForm(params);
    CAPTURE(i);
    CheckEmbeddingShape(m, EmbedNormalForm(m));
  }
}

}  // namespace
}  // namespace pte
