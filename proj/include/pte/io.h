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

#ifndef PTE_IO_H_
#define PTE_IO_H_

// JSON documents for games, spacetime setups, validation reports and solver
// traces, plus Graphviz export.
//
// Parsing throws ParseError with a stable code and a JSON pointer to the
// offending value. Codes: SYNTAX, SCHEMA, UNKNOWN_KEY, MISSING_KEY,
// BAD_NUMBER, DUPLICATE_ID, UNKNOWN_REFERENCE.

#include <string>
#include <string_view>

#include <json.hpp>

#include "pte/game.h"
#include "pte/normal_form.h"
#include "pte/spacetime.h"
#include "pte/trace.h"

namespace pte {

using Json = nlohmann::ordered_json;

Game ParseGame(std::string_view text);
Game GameFromJson(const Json& doc);
Json GameToJson(const Game& game);
// Two-space indented, trailing newline.
std::string SerializeGame(const Game& game);

SpacetimeSetup ParseSetup(std::string_view text);
SpacetimeSetup SetupFromJson(const Json& doc);
Json SetupToJson(const SpacetimeSetup& setup);
std::string SerializeSetup(const SpacetimeSetup& setup);

// Integers that fit in 64 bits become JSON integers, anything else a decimal
// (or p/q) string.
Json NumberToJson(const Number& n);

Json ReportToJson(const ValidationReport& report);
Json TraceToJson(const Game& game, const SolveResult& result);

// Graphviz rendering of the game as seen at `step` of the trace: outcomes
// already eliminated are gray, nodes of reached cells are black, multi-node
// cells are dashed clusters. At the last step the surviving outcomes are
// highlighted. Throws Error(kDomain) if `step` is out of range.
std::string ExportDot(const Game& game, const SolveResult& result, int step);

}  // namespace pte

#endif  // PTE_IO_H_
