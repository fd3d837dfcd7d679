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

// Command-line front end. Every command reads its document from a path or
// from standard input when the path is "-".
//
// Exit codes: 0 success (solve: unique equilibrium), 1 I/O, parse or
// precondition failure, 2 solve: empty equilibrium, 3 solve: several
// equilibria (ties), 4 validate: invalid game / oracle-compare: divergence /
// search-counterexample: nothing found.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pte/error.h"
#include "pte/game.h"
#include "pte/io.h"
#include "pte/oracle.h"
#include "pte/solver.h"
#include "pte/spacetime.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitMultiple = 3;
constexpr int kExitRejected = 4;

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pte::Error(pte::ErrorKind::kInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

pte::Game LoadGame(const std::string& path, bool setup, bool canonicalize) {
  const std::string text = ReadInput(path);
  pte::Game game = setup ? pte::BuildGame(pte::ParseSetup(text))
                         : pte::ParseGame(text);
  return canonicalize ? pte::Canonicalize(game) : game;
}

int StatusExit(pte::SolveStatus status) {
  switch (status) {
    case pte::SolveStatus::kUnique:
      return kExitOk;
    case pte::SolveStatus::kEmpty:
      return kExitEmpty;
    case pte::SolveStatus::kMultipleWithTies:
      return kExitMultiple;
  }
  return kExitFailure;
}

std::string StatusLine(const pte::Game& game, const pte::SolveResult& r) {
  std::string line = "status: " + std::string(pte::SolveStatusName(r.status)) +
                     "; equilibrium: [";
  for (std::size_t i = 0; i < r.fixpoint.size(); ++i) {
    if (i) line += ", ";
    line += game.VertexName(r.fixpoint[i]);
  }
  return line + "]";
}

// Returns a description of the first difference, if any.
std::optional<std::string> Compare(const pte::Game& game) {
  const pte::SolveResult fast = pte::Solve(game);
  const pte::SolveResult slow = pte::NaiveSolve(game);
  if (fast == slow) return std::nullopt;
  std::ostringstream msg;
  msg << "solver: " << pte::TraceToJson(game, fast).dump() << "\n"
      << "oracle: " << pte::TraceToJson(game, slow).dump();
  return msg.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfectly transparent equilibrium solver"};
  app.require_subcommand(1);

  std::string input = "-";
  bool setup = false;
  bool canonicalize = false;
  bool quiet = false;
  bool game_only = false;
  int step = -1;
  int random_count = 0;
  std::uint64_t seed = 1;
  std::string shape_name = "mixed";
  int min_size = 1;
  int max_size = 3;
  bool symmetric = false;

  auto* validate = app.add_subcommand("validate", "Validate a game or setup");
  validate->add_option("input", input, "Document path, '-' for stdin");
  validate->add_flag("--setup", setup, "Input is a spacetime setup");

  auto* canon = app.add_subcommand("canonicalize", "Prune to canonical form");
  canon->add_option("input", input, "Game document, '-' for stdin");

  auto* solve = app.add_subcommand("solve", "Compute the equilibrium");
  solve->add_option("input", input, "Document path, '-' for stdin");
  solve->add_flag("--setup", setup, "Input is a spacetime setup");
  solve->add_flag("--canonicalize", canonicalize,
                  "Canonicalize before solving");
  solve->add_flag("--quiet,-q", quiet, "Print only the final status line");

  auto* build = app.add_subcommand("spacetime-build",
                                   "Build the game induced by a setup");
  build->add_option("input", input, "Setup document, '-' for stdin");
  build->add_flag("--game-only", game_only, "Print only the game document");

  auto* dot = app.add_subcommand("export-dot", "Graphviz view of a trace step");
  dot->add_option("input", input, "Document path, '-' for stdin");
  dot->add_option("--step", step, "Trace step (default: last)");
  dot->add_flag("--setup", setup, "Input is a spacetime setup");
  dot->add_flag("--canonicalize", canonicalize, "Canonicalize first");

  auto* compare = app.add_subcommand(
      "oracle-compare", "Cross-check the solver against the naive oracle");
  compare->add_option("input", input, "Game document, '-' for stdin");
  compare->add_option("--random", random_count,
                      "Check N generated games instead of an input");
  compare->add_option("--seed", seed, "First generator seed");
  compare->add_option("--shape", shape_name,
                      "normal_form, perfect_info, general_imperfect, "
                      "spacetime or mixed");

  auto* search = app.add_subcommand(
      "search-counterexample",
      "Find a no-tie two-player matrix game with an empty equilibrium");
  search->add_option("--min-size", min_size, "Smallest side length");
  search->add_option("--max-size", max_size, "Largest side length");
  search->add_flag("--symmetric", symmetric, "Symmetric games only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*validate) {
      const std::string text = ReadInput(input);
      pte::ValidationReport report;
      if (setup) {
        const pte::SpacetimeSetup s = pte::ParseSetup(text);
        report = pte::ValidateSetup(s);
        if (report.ok()) {
          // The flags describe the induced game.
          const pte::ValidationReport built =
              pte::ValidateGame(pte::BuildGame(s));
          report.errors = built.errors;
          report.warnings.insert(report.warnings.end(), built.warnings.begin(),
                                 built.warnings.end());
          report.is_canonical = built.is_canonical;
          report.has_perfect_recall = built.has_perfect_recall;
          report.has_ties = built.has_ties;
        }
      } else {
        report = pte::ValidateGame(pte::ParseGame(text));
      }
      std::cout << pte::ReportToJson(report).dump(2) << "\n";
      return report.ok() ? kExitOk : kExitRejected;
    }

    if (*canon) {
      std::cout << pte::SerializeGame(pte::Canonicalize(pte::ParseGame(
          ReadInput(input))));
      return kExitOk;
    }

    if (*solve) {
      const pte::Game game = LoadGame(input, setup, canonicalize);
      const pte::SolveResult result = pte::Solve(game);
      if (quiet) {
        std::cout << StatusLine(game, result) << "\n";
      } else {
        std::cout << pte::TraceToJson(game, result).dump(2) << "\n";
      }
      return StatusExit(result.status);
    }

    if (*build) {
      const pte::SpacetimeSetup s = pte::ParseSetup(ReadInput(input));
      const pte::Game game = pte::BuildGame(s);
      if (game_only) {
        std::cout << pte::SerializeGame(game);
        return kExitOk;
      }
      pte::Json doc;
      doc["order"] = pte::Json::array();
      for (int p : pte::TotalOrder(s)) doc["order"].push_back(s.points[p].id);
      doc["game"] = pte::GameToJson(game);
      std::cout << doc.dump(2) << "\n";
      return kExitOk;
    }

    if (*dot) {
      const pte::Game game = LoadGame(input, setup, canonicalize);
      const pte::SolveResult result = pte::Solve(game);
      const int at =
          step < 0 ? static_cast<int>(result.steps.size()) - 1 : step;
      std::cout << pte::ExportDot(game, result, at);
      return kExitOk;
    }

    if (*compare) {
      if (random_count <= 0) {
        const auto diff = Compare(pte::ParseGame(ReadInput(input)));
        if (diff) {
          std::cerr << "divergence\n" << *diff << "\n";
          return kExitRejected;
        }
        std::cout << "agree\n";
        return kExitOk;
      }
      std::optional<pte::GameShape> fixed;
      if (shape_name != "mixed") {
        fixed = pte::ParseGameShape(shape_name);
        if (!fixed) {
          std::cerr << "error: unknown shape '" << shape_name << "'\n";
          return kExitFailure;
        }
      }
      const pte::GameShape shapes[] = {
          pte::GameShape::kNormalForm, pte::GameShape::kPerfectInfo,
          pte::GameShape::kGeneralImperfect, pte::GameShape::kSpacetime};
      int divergent = 0;
      for (int i = 0; i < random_count; ++i) {
        pte::GeneratorParams params;
        params.seed = seed + static_cast<std::uint64_t>(i);
        params.shape = fixed ? *fixed : shapes[i % 4];
        const pte::Game game = pte::RandomGame(params);
        if (const auto diff = Compare(game)) {
          ++divergent;
          std::cerr << "divergence at seed " << params.seed << " ("
                    << pte::GameShapeName(params.shape) << ")\n"
                    << *diff << "\n";
        }
      }
      std::cout << random_count - divergent << "/" << random_count
                << " games agree\n";
      return divergent == 0 ? kExitOk : kExitRejected;
    }

    if (*search) {
      pte::SearchParams params;
      params.min_rows = params.min_cols = min_size;
      params.max_rows = params.max_cols = max_size;
      params.symmetric = symmetric;
      const auto witness = pte::SearchEmptyPte(params);
      if (!witness) {
        std::cerr << "no witness in the searched range\n";
        return kExitRejected;
      }
      std::cout << pte::SerializeGame(witness->game);
      return kExitOk;
    }
  } catch (const pte::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
