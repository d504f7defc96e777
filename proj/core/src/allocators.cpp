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

#include "wonka/allocators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wonka/parallel.hpp"

namespace wonka {
namespace {

void check_dimensions(const Family& family, const BidProfile& bids) {
  if (static_cast<int>(bids.size()) != family.n()) {
    throw Error("bid profile does not match the agent count of the family");
  }
}

// Lexicographic comparison of ascending element lists, sizes already equal
// or irrelevant to the caller.
bool element_lex_less(WinnerSet a, WinnerSet b) {
  while (a != 0 && b != 0) {
    int ea = std::countr_zero(a);
    int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

bool has_removable_zero_bidder(const Family& family, WinnerSet set, const BidProfile& bids) {
  WinnerSet rest = set;
  while (rest != 0) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    if (bids[i] == 0 && family.contains(set & ~(WinnerSet{1} << i))) return true;
  }
  return false;
}

}  // namespace

Ratio claimed_alpha(AllocatorKind kind) {
  switch (kind) {
    case AllocatorKind::kGreedyKnapsack:
      return Ratio(1, 2);
    case AllocatorKind::kExactWelfare:
    case AllocatorKind::kExactCost:
    case AllocatorKind::kMaximalInRange:
      break;
  }
  return Ratio(1);
}

WinnerSet optimal_allocation(const Family& family, const BidProfile& bids, WinnerSet excluded) {
  check_dimensions(family, bids);
  bool any = false;
  Tick best = 0;
  for (WinnerSet s : family.sets()) {
    if ((s & excluded) != 0) continue;
    Tick sw = social_welfare(s, bids);
    if (!any || sw > best) {
      best = sw;
      any = true;
    }
  }
  if (!any) {
    throw InfeasibleError("no feasible set avoids the excluded agents");
  }
  for (WinnerSet s : family.sets()) {
    if ((s & excluded) != 0) continue;
    if (social_welfare(s, bids) != best) continue;
    if (has_removable_zero_bidder(family, s, bids)) continue;
    return s;
  }
  // A welfare-maximal zero-clean set always exists: removing a removable
  // zero-bidder keeps the set feasible and welfare-maximal, and sets shrink.
  throw Error("internal: no zero-clean welfare-maximal set");
}

WinnerSet min_cost_allocation(const Family& family, const BidProfile& costs,
                              std::optional<int> must_include) {
  check_dimensions(family, costs);
  bool any = false;
  Tick best_cost = 0;
  WinnerSet best_set = 0;
  for (WinnerSet s : family.sets()) {
    if (must_include.has_value() && !wins(s, *must_include)) continue;
    Tick cost = social_cost(s, costs);
    bool better = false;
    if (!any) {
      better = true;
    } else if (cost != best_cost) {
      better = cost < best_cost;
    } else if (std::popcount(s) != std::popcount(best_set)) {
      better = std::popcount(s) < std::popcount(best_set);
    } else {
      better = element_lex_less(s, best_set);
    }
    if (better) {
      any = true;
      best_cost = cost;
      best_set = s;
    }
  }
  if (!any) {
    if (must_include.has_value()) {
      throw InfeasibleError("no feasible set contains agent " + std::to_string(*must_include));
    }
    throw InfeasibleError("the feasible family is empty");
  }
  return best_set;
}

WinnerSet greedy_knapsack_allocation(const BidProfile& bids, const std::vector<Ratio>& weights,
                                     const Ratio& capacity) {
  if (bids.size() != weights.size()) {
    throw Error("bids and weights must have equal length");
  }
  if (bids.size() > static_cast<std::size_t>(kMaxAgents)) {
    throw Error("too many agents for a winner-set bitmask");
  }
  for (const Ratio& w : weights) {
    if (w <= 0) throw ConfigError("knapsack weights must be positive");
  }
  int n = static_cast<int>(bids.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    // density b/w compared exactly via cross-multiplication
    Ratio lhs = weights[b] * static_cast<long long>(bids[a]);
    Ratio rhs = weights[a] * static_cast<long long>(bids[b]);
    if (lhs != rhs) return lhs > rhs;
    return a < b;
  });
  WinnerSet greedy = 0;
  Ratio load{0};
  for (int i : order) {
    if (bids[i] == 0) continue;
    if (load + weights[i] <= capacity) {
      load += weights[i];
      greedy |= WinnerSet{1} << i;
    }
  }
  WinnerSet single = 0;
  Tick single_value = 0;
  for (int i = 0; i < n; ++i) {
    if (bids[i] > single_value && weights[i] <= capacity) {
      single_value = bids[i];
      single = WinnerSet{1} << i;
    }
  }
  return social_welfare(greedy, bids) >= single_value ? greedy : single;
}

int mir_allocation(const GeneralSpace& space, const MultiBid& mb) {
  return mir_allocation_restricted(space, mb, space.range);
}

int mir_allocation_restricted(const GeneralSpace& space, const MultiBid& mb,
                              const std::vector<int>& range_subset) {
  if (range_subset.empty()) {
    throw InfeasibleError("the allocation range is empty");
  }
  int best_index = -1;
  Tick best = 0;
  for (int idx : range_subset) {
    Tick sw = social_welfare(space, mb, idx);
    if (best_index < 0 || sw > best) {
      best = sw;
      best_index = idx;
    }
  }
  return best_index;
}

MeasuredAlpha measured_alpha(const GeneralSpace& space, const GridDomain& grid,
                             std::size_t budget) {
  std::uint64_t base = static_cast<std::uint64_t>(grid.n_ticks());
  std::uint64_t total = 1;
  for (int i = 0; i < space.n; ++i) {
    std::uint64_t agent_space = checked_pow(base, space.coords(i) - 1, budget);
    if (agent_space > budget || total > budget / agent_space) {
      throw BudgetError("measured_alpha sweep exceeds the budget of " + std::to_string(budget) +
                        " profiles");
    }
    total *= agent_space;
  }
  MeasuredAlpha out;
  bool have_ratio = false;
  MultiBid mb(space.n);
  for (int i = 0; i < space.n; ++i) mb[i].assign(space.coords(i), 0);
  std::vector<int> all_indices(space.allocations.size());
  std::iota(all_indices.begin(), all_indices.end(), 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (int i = 0; i < space.n; ++i) {
      for (int c = 1; c < space.coords(i); ++c) {
        mb[i][c] = static_cast<Tick>(rest % base);
        rest /= base;
      }
    }
    Tick w_all = social_welfare(space, mb, mir_allocation_restricted(space, mb, all_indices));
    Tick w_range = social_welfare(space, mb, mir_allocation_restricted(space, mb, space.range));
    ++out.profiles;
    if (w_all == 0) {
      ++out.skipped;
      continue;
    }
    Ratio ratio(static_cast<long long>(w_range), static_cast<long long>(w_all));
    if (!have_ratio || ratio < out.value) {
      out.value = ratio;
      have_ratio = true;
    }
  }
  if (!have_ratio) {
    out.value = Ratio(0);
    out.degenerate = true;
  } else if (out.value == Ratio(0)) {
    out.degenerate = true;
  }
  return out;
}

int tau(const Family& family) { return family.tau(); }

int tau_range(const GeneralSpace& space) {
  int best = 0;
  for (int idx : space.range) {
    int count = 0;
    for (int assignment : space.allocations[idx]) {
      if (assignment != 0) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

int max_winning_set_containing(const Family& family, int agent) {
  if (agent < 0 || agent >= family.n()) {
    throw Error("agent index out of range");
  }
  int k = family.max_size_containing(agent);
  if (k == 0) {
    throw InfeasibleError("agent " + std::to_string(agent) + " is in no feasible set");
  }
  return k;
}

}  // namespace wonka
