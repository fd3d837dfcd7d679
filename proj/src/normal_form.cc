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

#include "pte/normal_form.h"

#include <functional>
#include <set>

#include "pte/error.h"

namespace pte {

namespace {

std::string Join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::string>> NormalForm::Profiles() const {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> current;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == actions.size()) {
      out.push_back(current);
      return;
    }
    for (const std::string& a : actions[k]) {
      current.push_back(a);
      rec(k + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

Game EmbedNormalForm(const NormalForm& matrix) {
  if (matrix.players.empty()) {
    throw Error(ErrorKind::kInput, "normal form needs at least one player");
  }
  if (matrix.actions.size() != matrix.players.size()) {
    throw Error(ErrorKind::kInput, "one action list per player required");
  }
  for (std::size_t p = 0; p < matrix.players.size(); ++p) {
    if (matrix.actions[p].empty()) {
      throw Error(ErrorKind::kInput,
                  "player '" + matrix.players[p] + "' has no actions");
    }
  }

  Game game;
  for (const std::string& p : matrix.players) game.AddPlayer(p);
  std::set<std::string> declared;
  for (const auto& list : matrix.actions) {
    for (const std::string& a : list) {
      if (declared.insert(a).second) game.AddAction(a);
    }
  }

  std::vector<std::string> prefix;
  std::function<VertexId(std::size_t)> build = [&](std::size_t k) {
    if (k == matrix.players.size()) {
      auto it = matrix.payoffs.find(prefix);
      if (it == matrix.payoffs.end()) {
        throw Error(ErrorKind::kInput, "missing payoffs for profile (" +
                                           Join(prefix) + ")");
      }
      if (it->second.size() != matrix.players.size()) {
        throw Error(ErrorKind::kInput, "profile (" + Join(prefix) +
                                           ") needs one payoff per player");
      }
      return game.AddOutcome(Join(prefix), it->second);
    }
    const VertexId node =
        game.AddNode(prefix.empty() ? kEmptyHistoryId : Join(prefix),
                     PlayerId(static_cast<int>(k)), matrix.players[k]);
    for (const std::string& a : matrix.actions[k]) {
      prefix.push_back(a);
      const VertexId child = build(k + 1);
      prefix.pop_back();
      game.AddMove(node, game.ActionByName(a), child);
    }
    return node;
  };
  game.SetRoot(build(0));
  return game;
}

}  // namespace pte
