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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "pte/io.h"
#include "test_util.h"

namespace pte {
namespace {

using testing::FixturePath;
using testing::ReadFile;

struct Run {
  int exit = -1;
  std::string out;
  std::string err;
};

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("pte_cli_test_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

Run Pte(const std::string& args, const std::string& stdin_path = "") {
  const std::string err_path = TempPath("stderr");
  std::string cmd = std::string("\"") + PTE_CLI_PATH + "\" " + args;
  if (!stdin_path.empty()) cmd += " < \"" + stdin_path + "\"";
  cmd += " 2> \"" + err_path + "\"";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = ReadFile(err_path);
  std::filesystem::remove(err_path);
  return r;
}

std::string Fixture(const std::string& name) {
  return "\"" + FixturePath(name) + "\"";
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const std::string path = TempPath(name);
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

const char* kTiesGame = R"({
  "players": ["P"],
  "actions": ["a", "b"],
  "nodes": [{"id": "r", "player": "P", "infoset": "I",
             "moves": {"a": "x", "b": "y"}}],
  "outcomes": [{"id": "x", "payoffs": {"P": 1}},
               {"id": "y", "payoffs": {"P": 1}}],
  "root": "r"
})";

TEST_CASE("help and usage") {
  CHECK(Pte("--help").exit == 0);
  CHECK(Pte("").exit == 1);
  CHECK(Pte("frobnicate").exit == 1);
  CHECK(Pte("solve --step 2 " + Fixture("prisoners_dilemma.json")).exit == 1);
}

TEST_CASE("solve") {
  const Run pd = Pte("solve " + Fixture("prisoners_dilemma.json"));
  CHECK(pd.exit == 0);
  const Json trace = Json::parse(pd.out);
  CHECK(trace["final"]["status"] == "unique");
  CHECK(trace["final"]["equilibrium"] == Json({"C,c"}));
  CHECK(trace["steps"].size() == 3);

  const Run quiet = Pte("solve -q " + Fixture("prisoners_dilemma.json"));
  CHECK(quiet.out == "status: unique; equilibrium: [C,c]\n");

  CHECK(Pte("solve " + Fixture("empty_pte_2x2.json")).exit == 2);
  CHECK(Pte("solve --quiet " + Fixture("empty_pte_3x3.json")).out ==
        "status: empty; equilibrium: []\n");

  const std::string ties = WriteTemp("ties.json", kTiesGame);
  const Run multiple = Pte("solve -q \"" + ties + "\"");
  CHECK(multiple.exit == 3);
  CHECK(multiple.out ==
        "status: multiple_with_ties; equilibrium: [x, y]\n");
  std::filesystem::remove(ties);

  const Run setup =
      Pte("solve --setup -q " + Fixture("spacetime_example.json"));
  CHECK(setup.exit == 0);
  CHECK(setup.out == "status: unique; equilibrium: [2,_,5,7,10,13]\n");
}

TEST_CASE("standard input") {
  const Run r = Pte("solve -q -", FixturePath("prisoners_dilemma.json"));
  CHECK(r.exit == 0);
  CHECK(r.out == "status: unique; equilibrium: [C,c]\n");
  CHECK(Pte("solve -q", FixturePath("prisoners_dilemma.json")).out == r.out);
}

TEST_CASE("failures exit 1 with a message") {
  const Run missing = Pte("solve /nonexistent/game.json");
  CHECK(missing.exit == 1);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  const std::string bad = WriteTemp("bad.json", "{\"players\": [");
  const Run syntax = Pte("solve \"" + bad + "\"");
  CHECK(syntax.exit == 1);
  CHECK(syntax.err.find("SYNTAX") != std::string::npos);
  std::filesystem::remove(bad);

  // Not canonical: the solver refuses, the flag repairs it.
  const std::string chain = WriteTemp("chain.json", R"({
    "players": ["P"],
    "actions": ["a", "b"],
    "nodes": [{"id": "r", "player": "P", "infoset": "X",
               "moves": {"a": "n", "b": "z1"}},
              {"id": "n", "player": "P", "infoset": "X",
               "moves": {"a": "z2", "b": "z3"}}],
    "outcomes": [{"id": "z1", "payoffs": {"P": 1}},
                 {"id": "z2", "payoffs": {"P": 2}},
                 {"id": "z3", "payoffs": {"P": 3}}],
    "root": "r"
  })");
  const std::string merged = chain;
  const Run refused = Pte("solve \"" + merged + "\"");
  CHECK(refused.exit == 1);
  CHECK(refused.err.find("X") != std::string::npos);
  CHECK(Json::parse(Pte("validate \"" + merged + "\"").out)["is_canonical"] ==
        false);
  CHECK(Pte("solve --canonicalize -q \"" + merged + "\"").out ==
        "status: unique; equilibrium: [z2]\n");
  std::filesystem::remove(merged);
}

TEST_CASE("validate") {
  const Run ok = Pte("validate " + Fixture("prisoners_dilemma.json"));
  CHECK(ok.exit == 0);
  const Json report = Json::parse(ok.out);
  CHECK(report["ok"] == true);
  CHECK(report["is_canonical"] == true);
  CHECK(report["has_perfect_recall"] == true);

  Json doc = Json::parse(kTiesGame);
  doc["outcomes"].push_back({{"id", "stray"}, {"payoffs", {{"P", 2}}}});
  const std::string forest = WriteTemp("forest.json", doc.dump());
  const Run bad = Pte("validate \"" + forest + "\"");
  CHECK(bad.exit == 4);
  CHECK(Json::parse(bad.out)["ok"] == false);
  std::filesystem::remove(forest);

  const Run setup = Pte("validate --setup " + Fixture("spacetime_example.json"));
  CHECK(setup.exit == 0);
  CHECK(Json::parse(setup.out)["is_canonical"] == true);
}

TEST_CASE("canonicalize") {
  const Run r = Pte("canonicalize " + Fixture("prisoners_dilemma.json"));
  CHECK(r.exit == 0);
  CHECK(ParseGame(r.out) == testing::PdGame());
}

TEST_CASE("spacetime-build") {
  const Run r = Pte("spacetime-build " + Fixture("spacetime_example.json"));
  CHECK(r.exit == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["order"] == Json({"a", "b", "c", "d", "e", "f"}));
  CHECK(doc["game"]["outcomes"].size() == 14);
  CHECK(doc["game"]["root"] == "∅");

  const Run game =
      Pte("spacetime-build --game-only " + Fixture("spacetime_example.json"));
  CHECK(ParseGame(game.out) ==
        BuildGame(testing::SpacetimeFixture()));
}

TEST_CASE("export-dot") {
  const Run last = Pte("export-dot " + Fixture("prisoners_dilemma.json"));
  CHECK(last.exit == 0);
  CHECK(last.out.rfind("digraph game {", 0) == 0);
  CHECK(last.out.find("label=\"step 2\"") != std::string::npos);
  CHECK(Pte("export-dot --step 2 " + Fixture("prisoners_dilemma.json")).out ==
        last.out);
  CHECK(Pte("export-dot " + Fixture("prisoners_dilemma.json")).out ==
        last.out);
  const Run first =
      Pte("export-dot --step 0 " + Fixture("prisoners_dilemma.json"));
  CHECK(first.out.find("gray90") == std::string::npos);
  CHECK(Pte("export-dot --step 7 " + Fixture("prisoners_dilemma.json")).exit ==
        1);
}

TEST_CASE("oracle-compare") {
  const Run one = Pte("oracle-compare " + Fixture("spacetime_example.json") +
                      "");
  // A setup is not a game document.
  CHECK(one.exit == 1);
  const Run pd = Pte("oracle-compare " + Fixture("prisoners_dilemma.json"));
  CHECK(pd.exit == 0);
  CHECK(pd.out == "agree\n");
  const Run random = Pte("oracle-compare --random 40 --seed 7");
  CHECK(random.exit == 0);
  CHECK(random.out == "40/40 games agree\n");
  CHECK(Pte("oracle-compare --random 8 --shape spacetime").exit == 0);
  CHECK(Pte("oracle-compare --random 2 --shape bogus").exit == 1);
}

TEST_CASE("search-counterexample") {
  const Run r = Pte("search-counterexample");
  CHECK(r.exit == 0);
  CHECK(r.out == ReadFile(FixturePath("empty_pte_2x2.json")));
  const Run three = Pte("search-counterexample --min-size 3");
  CHECK(three.out == ReadFile(FixturePath("empty_pte_3x3.json")));
  const Run none = Pte("search-counterexample --max-size 1");
  CHECK(none.exit == 4);
  CHECK(none.err.find("no witness") != std::string::npos);
}

}  // namespace
}  // namespace pte
