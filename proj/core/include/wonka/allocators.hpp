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

#ifndef WONKA_ALLOCATORS_HPP_
#define WONKA_ALLOCATORS_HPP_

#include <cstdint>
#include <optional>

#include "wonka/domain.hpp"
#include "wonka/general_space.hpp"
#include "wonka/set_system.hpp"

namespace wonka {

enum class AllocatorKind { kExactWelfare, kExactCost, kGreedyKnapsack, kMaximalInRange };

struct AllocatorSpec {
  AllocatorKind kind = AllocatorKind::kExactWelfare;
};

// 1 for the exact allocators, 1/2 for greedy knapsack. The maximal-in-range
// alpha is measured, not claimed; see measured_alpha.
Ratio claimed_alpha(AllocatorKind kind);

// Welfare-maximal feasible set under the fixed tie-break chain:
// (1) drop candidates carrying a removable zero-bidder (an i in S with
//     b_i = 0 and S \ {i} feasible),
// (2) prefer the largest winner set,
// (3) then the canonically first.
// Sets intersecting `excluded` are never considered; throws InfeasibleError
// when nothing survives the restriction.
WinnerSet optimal_allocation(const Family& family, const BidProfile& bids,
                             WinnerSet excluded = 0);

// Cost-minimal feasible set, restricted to sets containing must_include when
// given; ties broken by smaller set, then lexicographic element order.
WinnerSet min_cost_allocation(const Family& family, const BidProfile& costs,
                              std::optional<int> must_include = std::nullopt);

// Better of density-greedy (with skipping) and the best single fitting item;
// guarantees at least half the optimal welfare. Zero bidders never win.
WinnerSet greedy_knapsack_allocation(const BidProfile& bids, const std::vector<Ratio>& weights,
                                     const Ratio& capacity);

// Welfare-maximal allocation over the space's range (ties: earliest in the
// allocation list). Returns the allocation index.
int mir_allocation(const GeneralSpace& space, const MultiBid& mb);

// Same, over an explicit subset of allocation indices (ascending order).
int mir_allocation_restricted(const GeneralSpace& space, const MultiBid& mb,
                              const std::vector<int>& range_subset);

struct MeasuredAlpha {
  Ratio value{0};
  bool degenerate = false;      // the range can be forced to welfare 0
  std::uint64_t profiles = 0;
  std::uint64_t skipped = 0;    // 0/0 profiles
};

// min over grid multi-bids of (max welfare over the range) / (max welfare
// over all allocations), skipping 0/0.
MeasuredAlpha measured_alpha(const GeneralSpace& space, const GridDomain& grid,
                             std::size_t budget = kSweepBudget);

int tau(const Family& family);

// Max winner count over the space's range.
int tau_range(const GeneralSpace& space);

// k for the agent; throws InfeasibleError when no feasible set contains her.
int max_winning_set_containing(const Family& family, int agent);

}  // namespace wonka

#endif  // WONKA_ALLOCATORS_HPP_
