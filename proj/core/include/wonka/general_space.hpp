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

#ifndef WONKA_GENERAL_SPACE_HPP_
#define WONKA_GENERAL_SPACE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wonka/domain.hpp"

namespace wonka {

// Explicit general outcome space: a list of global allocations, each
// assigning every agent one of her personal allocations. Personal allocation
// 0 is always the empty allocation "".
struct GeneralSpace {
  int n = 0;
  std::vector<std::vector<std::string>> ids;   // ids[i][0] == ""; rest sorted, unique
  std::vector<std::vector<int>> allocations;   // allocations[a][i] indexes ids[i]
  std::vector<int> range;                      // ascending indices into allocations

  // `allocs` rows use nullopt for the empty allocation. Every agent must have
  // at least one row assigning her the empty allocation; the range (when
  // given) must be a nonempty subset of row indices.
  static GeneralSpace create(const std::vector<std::vector<std::optional<std::string>>>& allocs,
                             const std::vector<int>* range = nullptr);

  const std::vector<std::string>& personal_allocations(int agent) const;
  int coords(int agent) const { return static_cast<int>(ids[agent].size()); }
  bool can_lose(int agent) const;
};

// mb[i][k] is agent i's bid for ids[i][k]; mb[i][0] must be 0.
using MultiBid = std::vector<std::vector<Tick>>;

void validate_multibid(const GeneralSpace& space, const MultiBid& mb, Tick max_tick);

Tick social_welfare(const GeneralSpace& space, const MultiBid& mb, int allocation_index);

struct GeneralOutcome {
  std::vector<int> assignment;   // per agent: index into ids[i]; 0 = empty
  std::vector<Tick> payments;
  WinnerSet excluded = 0;
  std::optional<int> rebate_agent;
  int chosen_index = -1;         // index into space.allocations
};

WinnerSet general_winners(const GeneralOutcome& outcome);

// true_values is aligned to ids[agent] (entry 0 must be 0).
Tick utility(const GeneralSpace& space, const GeneralOutcome& outcome, int agent,
             const std::vector<Tick>& true_values);

// Size of one agent's bid space, (n_ticks)^(coords - 1), saturating at
// cap + 1 so callers can compare against a budget.
std::uint64_t agent_bid_count(const GeneralSpace& space, int agent, Tick n_ticks,
                              std::uint64_t cap);

// Decodes a bid-space index into a coordinate vector aligned to ids[agent];
// entry 0 stays 0 and nonempty coordinates vary with coordinate 1 fastest.
void decode_agent_bid(const GeneralSpace& space, int agent, std::uint64_t index, Tick n_ticks,
                      std::vector<Tick>& out);

}  // namespace wonka

#endif  // WONKA_GENERAL_SPACE_HPP_
