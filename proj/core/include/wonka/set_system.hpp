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

#ifndef WONKA_SET_SYSTEM_HPP_
#define WONKA_SET_SYSTEM_HPP_

#include <cstddef>
#include <vector>

#include "wonka/domain.hpp"

namespace wonka {

enum class SetKind { kDigitalGoods, kSingleItem, kKUnit, kKnapsack, kExplicit };

// Declarative description of a binary feasible family over agents 0..n-1.
// Winner sets are bitmasks (bit i set = agent i wins).
struct SetSystemSpec {
  SetKind kind = SetKind::kDigitalGoods;
  int n = 0;
  int k = 0;                        // k_unit: maximum winner-set size
  std::vector<Ratio> weights;       // knapsack
  Ratio capacity{0};                // knapsack
  std::vector<WinnerSet> family;    // explicit
  bool include_empty = false;       // explicit: add the empty set if absent
};

// Canonical order: larger sets first, ties by lexicographic comparison of the
// ascending element lists ({0,3} precedes {1,2}).
bool canonical_less(WinnerSet a, WinnerSet b);

// Complete, duplicate-free, canonically ordered family. Throws BudgetError
// when the enumeration work exceeds the budget and ConfigError on invalid
// specs.
std::vector<WinnerSet> enumerate_feasible(const SetSystemSpec& spec,
                                          std::size_t budget = kEnumerationBudget);

class Family {
 public:
  Family() = default;

  static Family from_spec(const SetSystemSpec& spec, std::size_t budget = kEnumerationBudget);
  static Family from_sets(int n, std::vector<WinnerSet> sets);

  int n() const { return n_; }
  const std::vector<WinnerSet>& sets() const { return sets_; }
  bool empty() const { return sets_.empty(); }
  bool contains(WinnerSet set) const;

  // Maximum winner-set cardinality over the family.
  int tau() const;

  // Maximum cardinality over sets disjoint from `excluded`; 0 when only the
  // empty set (or nothing) survives.
  int tau_excluding(WinnerSet excluded) const;

  // k for an agent: max |S| over feasible S containing the agent, 0 if none.
  int max_size_containing(int agent) const;

  bool can_lose(int agent) const;

 private:
  int n_ = 0;
  std::vector<WinnerSet> sets_;        // canonical order
  std::vector<WinnerSet> by_mask_;     // ascending masks, for contains()
};

}  // namespace wonka

#endif  // WONKA_SET_SYSTEM_HPP_
