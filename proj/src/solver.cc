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

#include "pte/solver.h"

#include <algorithm>
#include <optional>
#include <tuple>

#include <boost/dynamic_bitset.hpp>

#include "pte/error.h"

namespace pte {

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kUnique:
      return "unique";
    case SolveStatus::kEmpty:
      return "empty";
    case SolveStatus::kMultipleWithTies:
      return "multiple_with_ties";
  }
  return "unknown";
}

namespace {

using OutcomeSet = boost::dynamic_bitset<>;

// Outcome sets below every vertex, cell, and (cell, action) pair, as bitsets
// over Game::OutcomeIndex.
class DescendantIndex {
 public:
  explicit DescendantIndex(const Game& game)
      : game_(game),
        below_vertex_(game.num_vertices(),
                      OutcomeSet(game.outcomes().size())),
        below_cell_(game.num_infosets(), OutcomeSet(game.outcomes().size())),
        below_cell_action_(game.num_infosets()) {
    Fill(game.root());
    for (int c = 0; c < game.num_infosets(); ++c) {
      const InfosetId cell(c);
      const auto actions = game.InfosetActions(cell);
      auto& per_action = below_cell_action_[c];
      for (ActionId a : actions) {
        OutcomeSet set(game.outcomes().size());
        for (VertexId member : game.InfosetMembers(cell)) {
          set |= below_vertex_[Successor(game, member, a).value()];
        }
        per_action.emplace_back(a, std::move(set));
      }
      for (VertexId member : game.InfosetMembers(cell)) {
        below_cell_[c] |= below_vertex_[member.value()];
      }
    }
  }

  OutcomeSet ToSet(const std::vector<VertexId>& outcomes) const {
    OutcomeSet set(game_.outcomes().size());
    for (VertexId z : outcomes) set.set(game_.OutcomeIndex(z));
    return set;
  }

  std::vector<VertexId> ToVector(const OutcomeSet& set) const {
    std::vector<VertexId> out;
    for (auto i = set.find_first(); i != OutcomeSet::npos;
         i = set.find_next(i)) {
      out.push_back(game_.outcomes()[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const OutcomeSet& BelowCell(InfosetId c) const {
    return below_cell_[c.value()];
  }
  const std::vector<std::pair<ActionId, OutcomeSet>>& BelowCellActions(
      InfosetId c) const {
    return below_cell_action_[c.value()];
  }

 private:
  void Fill(VertexId v) {
    if (game_.IsOutcome(v)) {
      below_vertex_[v.value()].set(game_.OutcomeIndex(v));
      return;
    }
    for (const Move& m : game_.Moves(v)) {
      Fill(m.child);
      below_vertex_[v.value()] |= below_vertex_[m.child.value()];
    }
  }

  const Game& game_;
  std::vector<OutcomeSet> below_vertex_;
  std::vector<OutcomeSet> below_cell_;
  std::vector<std::vector<std::pair<ActionId, OutcomeSet>>> below_cell_action_;
};

std::vector<InfosetId> ReachedImpl(const Game& game,
                                   const DescendantIndex& index,
                                   const OutcomeSet& surviving) {
  if (surviving.none()) {
    throw Error(ErrorKind::kDomain,
                "reached infosets are undefined for an empty surviving set");
  }
  std::vector<InfosetId> reached;
  for (int c = 0; c < game.num_infosets(); ++c) {
    if (surviving.is_subset_of(index.BelowCell(InfosetId(c)))) {
      reached.emplace_back(c);
    }
  }
  return reached;
}

MaximinRecord MaximinImpl(const Game& game, const DescendantIndex& index,
                          const OutcomeSet& surviving, InfosetId cell) {
  const PlayerId owner = game.InfosetPlayer(cell);
  std::optional<MaximinRecord> best;
  for (const auto& [action, below] : index.BelowCellActions(cell)) {
    const OutcomeSet live = surviving & below;
    if (live.none()) continue;
    std::optional<Number> worst;
    for (auto i = live.find_first(); i != OutcomeSet::npos;
         i = live.find_next(i)) {
      const Number& u = game.Payoff(owner, game.outcomes()[i]);
      if (!worst || u < *worst) worst = u;
    }
    if (!best || *worst > best->value) {
      best = MaximinRecord{cell, owner, *worst, action};
    }
  }
  if (!best) {
    throw Error(ErrorKind::kInternal, "no action of infoset '" +
                                          game.InfosetLabel(cell) +
                                          "' leads to a surviving outcome");
  }
  return *best;
}

struct Round {
  std::vector<MaximinRecord> maximins;
  std::vector<Preemption> preemptions;
  OutcomeSet preempted;
};

Round PreemptImpl(const Game& game, const DescendantIndex& index,
                  const OutcomeSet& surviving,
                  const std::vector<InfosetId>& reached) {
  Round round;
  round.preempted = OutcomeSet(surviving.size());
  for (InfosetId cell : reached) {
    round.maximins.push_back(MaximinImpl(game, index, surviving, cell));
  }
  for (auto i = surviving.find_first(); i != OutcomeSet::npos;
       i = surviving.find_next(i)) {
    const VertexId z = game.outcomes()[i];
    for (const MaximinRecord& record : round.maximins) {
      if (game.Payoff(record.player, z) < record.value) {
        // A preempting deviation never points at the preempted outcome's own
        // subtree, whose minimum is at most u(z).
        if (ActionToward(game, record.infoset, z) == record.action) {
          throw Error(ErrorKind::kInternal,
                      "maximin witness leads to the preempted outcome '" +
                          game.VertexName(z) + "'");
        }
        round.preemptions.push_back({z, record.player, record.infoset});
        round.preempted.set(i);
      }
    }
  }
  std::sort(round.preemptions.begin(), round.preemptions.end(),
            [](const Preemption& a, const Preemption& b) {
              return std::tie(a.outcome, a.infoset) <
                     std::tie(b.outcome, b.infoset);
            });
  return round;
}

void RequireCanonical(const Game& game) {
  const ValidationReport report = ValidateGame(game);
  if (!report.ok()) {
    throw Error(ErrorKind::kPrecondition,
                "invalid game: " + report.errors.front().code + " " +
                    report.errors.front().message);
  }
  for (int c = 0; c < game.num_infosets(); ++c) {
    const InfosetId cell(c);
    const auto& members = game.InfosetMembers(cell);
    for (VertexId n : members) {
      const std::vector<VertexId> below = Descendants(game, n);
      for (VertexId m : members) {
        if (m != n && std::binary_search(below.begin(), below.end(), m)) {
          throw Error(ErrorKind::kPrecondition,
                      "game is not canonical: infoset '" +
                          game.InfosetLabel(cell) + "' contains '" +
                          game.VertexName(n) + "' and its descendant '" +
                          game.VertexName(m) + "'");
        }
      }
    }
  }
}

}  // namespace

std::vector<InfosetId> ReachedInfosets(const Game& game,
                                       const std::vector<VertexId>& surviving) {
  const DescendantIndex index(game);
  return ReachedImpl(game, index, index.ToSet(surviving));
}

MaximinRecord Maximin(const Game& game, const std::vector<VertexId>& surviving,
                      InfosetId cell) {
  const DescendantIndex index(game);
  return MaximinImpl(game, index, index.ToSet(surviving), cell);
}

std::vector<VertexId> Preempted(const Game& game,
                                const std::vector<VertexId>& surviving,
                                const std::vector<InfosetId>& reached) {
  const DescendantIndex index(game);
  return index.ToVector(
      PreemptImpl(game, index, index.ToSet(surviving), reached).preempted);
}

SolveResult Solve(const Game& game) {
  RequireCanonical(game);
  const DescendantIndex index(game);

  SolveResult result;
  result.has_ties = HasTies(game);
  OutcomeSet surviving(game.outcomes().size());
  surviving.set();

  for (int step = 0;; ++step) {
    SolverState state;
    state.step = step;
    state.surviving = index.ToVector(surviving);
    state.reached = ReachedImpl(game, index, surviving);
    Round round = PreemptImpl(game, index, surviving, state.reached);
    state.maximins = std::move(round.maximins);
    state.preemptions = std::move(round.preemptions);
    state.preempted = index.ToVector(round.preempted);
    result.steps.push_back(std::move(state));

    if (round.preempted.none()) break;
    const OutcomeSet next = surviving - round.preempted;
    if (next.none()) {
      result.last_nonempty = index.ToVector(surviving);
      result.eliminating_step = step;
      surviving = next;
      break;
    }
    surviving = next;
  }

  result.fixpoint = index.ToVector(surviving);
  if (result.fixpoint.size() == 1) {
    result.status = SolveStatus::kUnique;
  } else if (result.fixpoint.empty()) {
    result.status = SolveStatus::kEmpty;
  } else if (result.has_ties) {
    result.status = SolveStatus::kMultipleWithTies;
  } else {
    throw Error(ErrorKind::kInternal,
                "several outcomes survived in a game without ties");
  }
  return result;
}

}  // namespace pte
