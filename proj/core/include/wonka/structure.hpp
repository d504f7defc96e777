// Copyright 2026 The Wonka Authors
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

#ifndef WONKA_STRUCTURE_HPP_
#define WONKA_STRUCTURE_HPP_

#include <optional>
#include <vector>

#include "wonka/verifier.hpp"

namespace wonka {

// Structural facts for one (agent, bid): does some opponent profile hand her
// a golden ticket (win free; procurement: win and be paid h), a wooden spoon
// (lose), or a zero-margin outcome (truthful utility exactly 0)? Each found
// fact carries the first full profile (sweep order) witnessing it.
struct StructureRow {
  int agent = 0;
  Tick bid = 0;
  bool golden_ticket = false;
  std::optional<BidProfile> golden_profile;
  bool wooden_spoon = false;
  std::optional<BidProfile> spoon_profile;
  bool zero_margin = false;
  std::optional<BidProfile> zero_margin_profile;
};

struct GeneralStructureRow {
  int agent = 0;
  std::vector<Tick> bid;
  bool golden_ticket = false;
  std::optional<MultiBid> golden_profile;
  bool wooden_spoon = false;
  std::optional<MultiBid> spoon_profile;
  bool zero_margin = false;
  std::optional<MultiBid> zero_margin_profile;
};

struct StructureReport {
  std::vector<StructureRow> rows;                 // binary rules
  std::vector<GeneralStructureRow> general_rows;  // wonka_general
  bool willy_wonka = false;
  std::uint64_t evaluations = 0;
};

// Exhaustive classification over every (agent, bid). willy_wonka holds when
// every row has a golden ticket and either a wooden spoon or, failing that, a
// zero-margin boundary profile. A bid of 0 is golden wherever the agent pays
// 0, won or not: winning for free and losing are the same outcome there.
StructureReport is_willy_wonka(const MechanismConfig& cfg, const SweepOptions& opts = {});

}  // namespace wonka

#endif  // WONKA_STRUCTURE_HPP_
