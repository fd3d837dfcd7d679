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

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "pte/error.h"
#include "pte/game.h"

namespace pte {

bool ValidationReport::HasError(std::string_view code) const {
  return std::any_of(errors.begin(), errors.end(),
                     [&](const Issue& i) { return i.code == code; });
}

namespace {

std::vector<bool> ReachableFrom(const Game& game, VertexId root) {
  std::vector<bool> seen(game.num_vertices(), false);
  if (!root.valid()) return seen;
  std::vector<VertexId> stack = {root};
  seen[root.value()] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (game.IsOutcome(v)) continue;
    for (const Move& m : game.Moves(v)) {
      if (!seen[m.child.value()]) {
        seen[m.child.value()] = true;
        stack.push_back(m.child);
      }
    }
  }
  return seen;
}

}  // namespace

ValidationReport ValidateGame(const Game& game) {
  ValidationReport report;
  auto error = [&](std::string code, std::string message,
                   std::vector<std::string> ids) {
    report.errors.push_back(
        {std::move(code), std::move(message), std::move(ids)});
  };

  const VertexId root = game.root();
  if (!root.valid()) {
    error("NO_ROOT", "game has no root", {});
  } else if (game.InDegree(root) > 0) {
    error("ROOT_HAS_PARENT", "the root is the successor of another node",
          {game.VertexName(root)});
  }

  for (int i = 0; i < game.num_vertices(); ++i) {
    const VertexId v(i);
    if (game.InDegree(v) > 1) {
      std::vector<std::string> ids = {game.VertexName(v)};
      for (VertexId n : game.choice_nodes()) {
        for (const Move& m : game.Moves(n)) {
          if (m.child == v) {
            ids.push_back(game.VertexName(n) + "/" +
                          game.ActionName(m.action));
          }
        }
      }
      error("DUPLICATE_SUCCESSOR",
            "'" + game.VertexName(v) +
                "' is the successor of more than one (node, action) pair",
            std::move(ids));
    }
  }

  if (root.valid()) {
    const std::vector<bool> reachable = ReachableFrom(game, root);
    std::vector<std::string> extra_roots;
    std::vector<std::string> detached;
    for (int i = 0; i < game.num_vertices(); ++i) {
      if (reachable[i]) continue;
      const VertexId v(i);
      (game.InDegree(v) == 0 ? extra_roots : detached)
          .push_back(game.VertexName(v));
    }
    if (!extra_roots.empty()) {
      error("FOREST", "vertices without a predecessor besides the root",
            std::move(extra_roots));
    }
    if (!detached.empty()) {
      error("FOREST", "vertices not connected to the root",
            std::move(detached));
    }
  }

  for (VertexId n : game.choice_nodes()) {
    if (game.Moves(n).empty()) {
      error("EMPTY_ACTIONS", "choice node without available actions",
            {game.VertexName(n)});
    }
  }

  for (int c = 0; c < game.num_infosets(); ++c) {
    const InfosetId cell(c);
    const auto& members = game.InfosetMembers(cell);
    const VertexId first = members.front();
    for (VertexId n : members) {
      if (game.PlayerAt(n) != game.PlayerAt(first)) {
        error("INFOSET_PLAYER_MISMATCH",
              "infoset '" + game.InfosetLabel(cell) +
                  "' contains nodes of different players",
              {game.InfosetLabel(cell), game.VertexName(first),
               game.VertexName(n)});
      }
      if (game.ActionsAt(n) != game.ActionsAt(first)) {
        error("INFOSET_ACTION_MISMATCH",
              "infoset '" + game.InfosetLabel(cell) +
                  "' contains nodes with different action sets",
              {game.InfosetLabel(cell), game.VertexName(first),
               game.VertexName(n)});
      }
    }
  }

  for (VertexId z : game.outcomes()) {
    if (static_cast<int>(game.Payoffs(z).size()) != game.num_players()) {
      error("PAYOFF_COUNT", "outcome does not have one payoff per player",
            {game.VertexName(z)});
    }
  }

  std::vector<bool> action_used(game.num_actions(), false);
  for (VertexId n : game.choice_nodes()) {
    for (const Move& m : game.Moves(n)) action_used[m.action.value()] = true;
  }
  for (int a = 0; a < game.num_actions(); ++a) {
    if (!action_used[a]) {
      report.warnings.push_back({"UNUSED_ACTION",
                                 "declared action is never available",
                                 {game.ActionName(ActionId(a))}});
    }
  }

  if (report.ok()) {
    report.is_canonical = IsCanonical(game);
    report.has_perfect_recall = HasPerfectRecall(game);
    report.has_ties = HasTies(game);
  }
  return report;
}

bool HasTies(const Game& game) {
  for (int p = 0; p < game.num_players(); ++p) {
    std::set<Number> seen;
    for (VertexId z : game.outcomes()) {
      const auto payoffs = game.Payoffs(z);
      if (p >= static_cast<int>(payoffs.size())) continue;
      if (!seen.insert(payoffs[p]).second) return true;
    }
  }
  return false;
}

bool IsCanonical(const Game& game) {
  for (int c = 0; c < game.num_infosets(); ++c) {
    const auto& members = game.InfosetMembers(InfosetId(c));
    for (VertexId n : members) {
      const std::vector<VertexId> below = Descendants(game, n);
      for (VertexId m : members) {
        if (m != n && std::binary_search(below.begin(), below.end(), m)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool HasPerfectRecall(const Game& game) {
  using Experience = std::vector<std::pair<InfosetId, ActionId>>;
  for (int c = 0; c < game.num_infosets(); ++c) {
    const InfosetId cell(c);
    const PlayerId owner = game.InfosetPlayer(cell);
    std::optional<Experience> reference;
    for (VertexId n : game.InfosetMembers(cell)) {
      Experience own;
      VertexId child = n;
      VertexId parent = game.Parent(n);
      for (int guard = 0; parent.valid() && guard < game.num_vertices();
           ++guard) {
        if (game.PlayerAt(parent) == owner) {
          own.emplace_back(game.InfosetOf(parent),
                           ActionToward(game, parent, child));
        }
        child = parent;
        parent = game.Parent(parent);
      }
      std::reverse(own.begin(), own.end());
      if (!reference) {
        reference = std::move(own);
      } else if (*reference != own) {
        return false;
      }
    }
  }
  return true;
}

namespace {

class Canonicalizer {
 public:
  explicit Canonicalizer(const Game& game)
      : game_(game),
        kept_(game.num_vertices(), false),
        moves_(game.num_vertices()),
        choice_on_path_(game.num_infosets()) {}

  Game Run() {
    Visit(game_.root());
    return Rebuild();
  }

 private:
  // Returns the vertex that takes the place of `v` in the pruned tree.
  VertexId Visit(VertexId v) {
    while (!game_.IsOutcome(v)) {
      const auto& taken = choice_on_path_[game_.InfosetOf(v).value()];
      if (!taken) break;
      v = Successor(game_, v, *taken);
    }
    kept_[v.value()] = true;
    if (game_.IsOutcome(v)) return v;

    auto& slot = choice_on_path_[game_.InfosetOf(v).value()];
    for (const Move& m : game_.Moves(v)) {
      slot = m.action;
      moves_[v.value()].push_back({m.action, Visit(m.child)});
    }
    slot.reset();
    return v;
  }

  Game Rebuild() const {
    Game out;
    for (int p = 0; p < game_.num_players(); ++p) {
      out.AddPlayer(game_.PlayerName(PlayerId(p)));
    }
    for (int a = 0; a < game_.num_actions(); ++a) {
      out.AddAction(game_.ActionName(ActionId(a)));
    }
    std::vector<VertexId> remap(game_.num_vertices());
    for (int i = 0; i < game_.num_vertices(); ++i) {
      const VertexId v(i);
      if (!kept_[i]) continue;
      if (game_.IsOutcome(v)) {
        auto payoffs = game_.Payoffs(v);
        remap[i] = out.AddOutcome(game_.VertexName(v),
                                  {payoffs.begin(), payoffs.end()});
      } else {
        remap[i] = out.AddNode(game_.VertexName(v), game_.PlayerAt(v),
                               game_.InfosetLabel(game_.InfosetOf(v)));
      }
    }
    for (int i = 0; i < game_.num_vertices(); ++i) {
      if (!kept_[i]) continue;
      for (const Move& m : moves_[i]) {
        out.AddMove(remap[i], m.action, remap[m.child.value()]);
      }
    }
    out.SetRoot(remap[game_.root().value()]);
    return out;
  }

  const Game& game_;
  std::vector<bool> kept_;
  std::vector<std::vector<Move>> moves_;
  std::vector<std::optional<ActionId>> choice_on_path_;
};

}  // namespace

Game Canonicalize(const Game& game) {
  const ValidationReport report = ValidateGame(game);
  if (!report.ok()) {
    throw Error(ErrorKind::kPrecondition,
                "cannot canonicalize an invalid game: " +
                    report.errors.front().code + " " +
                    report.errors.front().message);
  }
  return Canonicalizer(game).Run();
}

}  // namespace pte
