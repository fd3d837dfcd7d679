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

#ifndef PTE_NORMAL_FORM_H_
#define PTE_NORMAL_FORM_H_

#include <map>
#include <string>
#include <vector>

#include "pte/game.h"
#include "pte/number.h"

namespace pte {

// A strategic-form game: one action list per player and a payoff vector for
// every action profile (one action label per player, in player order).
struct NormalForm {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;
  std::map<std::vector<std::string>, std::vector<Number>> payoffs;

  // All profiles in lexicographic order of action-list positions, first
  // player slowest.
  std::vector<std::vector<std::string>> Profiles() const;
};

// Id of the root node in games produced by EmbedNormalForm.
inline constexpr const char* kEmptyHistoryId = "\xE2\x88\x85";  // "∅"

// Lays the matrix out as a tree: players move in order, each player's nodes
// form a single cell, and leaves carry the matrix payoffs. Node ids are the
// comma-joined action prefixes; outcome ids the full profiles ("C,c").
// Throws Error(kInput) for a missing profile or malformed lists.
Game EmbedNormalForm(const NormalForm& matrix);

}  // namespace pte

#endif  // PTE_NORMAL_FORM_H_
