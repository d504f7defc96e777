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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "wonka/allocators.hpp"

using namespace wonka;

namespace {

Family k_unit_family(int n, int k) {
  SetSystemSpec spec;
  spec.kind = SetKind::kKUnit;
  spec.n = n;
  spec.k = k;
  return Family::from_spec(spec);
}

Family digital_family(int n) {
  SetSystemSpec spec;
  spec.kind = SetKind::kDigitalGoods;
  spec.n = n;
  return Family::from_spec(spec);
}

// Oracle max welfare by direct enumeration, no tie-breaking.
Tick oracle_max_welfare(const Family& family, const BidProfile& bids, WinnerSet excluded = 0) {
  Tick best = -1;
  for (WinnerSet s : family.sets()) {
    if ((s & excluded) != 0) continue;
    best = std::max(best, social_welfare(s, bids));
  }
  return best;
}

Tick oracle_min_cost(const Family& family, const BidProfile& costs,
                     std::optional<int> must_include = std::nullopt) {
  Tick best = -1;
  for (WinnerSet s : family.sets()) {
    if (must_include.has_value() && !wins(s, *must_include)) continue;
    Tick cost = social_cost(s, costs);
    if (best < 0 || cost < best) best = cost;
  }
  return best;
}

// 2x2 general space: agent 0 may get x, agent 1 may get y, independently.
GeneralSpace two_by_two(const std::vector<int>* range = nullptr) {
  std::vector<std::vector<std::optional<std::string>>> allocs = {
      {std::nullopt, std::nullopt},
      {std::string("x"), std::nullopt},
      {std::nullopt, std::string("y")},
      {std::string("x"), std::string("y")},
  };
  return GeneralSpace::create(allocs, range);
}

}  // namespace

TEST_CASE("claimed alpha per allocator kind") {
  CHECK(claimed_alpha(AllocatorKind::kExactWelfare) == Ratio(1));
  CHECK(claimed_alpha(AllocatorKind::kExactCost) == Ratio(1));
  CHECK(claimed_alpha(AllocatorKind::kGreedyKnapsack) == Ratio(1, 2));
  CHECK(claimed_alpha(AllocatorKind::kMaximalInRange) == Ratio(1));
}

TEST_CASE("optimal allocation on the k-unit example") {
  Family f = k_unit_family(3, 2);
  // delta = 1/4: (0.50, 0.75, 1.00) = ticks (2, 3, 4).
  WinnerSet a = optimal_allocation(f, {2, 3, 4});
  CHECK(a == 0b110u);
  CHECK(social_welfare(a, {2, 3, 4}) == 7);   // 1.75
  CHECK(optimal_allocation(f, {0, 0, 0}) == 0u);
  CHECK(optimal_allocation(f, {4, 4, 4}) == 0b011u);   // largest then canonical
}

TEST_CASE("optimal allocation excludes zero bidders when feasible") {
  Family dig = digital_family(3);
  CHECK(optimal_allocation(dig, {2, 0, 0}) == 0b001u);
  CHECK(optimal_allocation(dig, {2, 0, 3}) == 0b101u);
  // Zero bidder forced in when removal is infeasible.
  Family forced = Family::from_sets(2, {0b11u, 0b00u});
  CHECK(optimal_allocation(forced, {0, 3}) == 0b11u);
}

TEST_CASE("optimal allocation honors exclusion masks") {
  Family f = k_unit_family(3, 2);
  WinnerSet a = optimal_allocation(f, {2, 3, 4}, 0b100u);
  CHECK(a == 0b011u);
  Family no_empty = Family::from_sets(2, {0b11u});
  CHECK_THROWS_AS(optimal_allocation(no_empty, {1, 1}, 0b01u), InfeasibleError);
  CHECK_THROWS_AS(optimal_allocation(f, {1, 1}, 0), Error);   // dimension mismatch
}

TEST_CASE("optimal allocation matches the exhaustive oracle everywhere") {
  std::vector<Family> families;
  families.push_back(k_unit_family(3, 2));
  families.push_back(digital_family(3));
  families.push_back(Family::from_sets(4, {0b0011u, 0b1100u, 0b0110u, 0b1000u, 0u}));
  for (const Family& f : families) {
    int n = f.n();
    Tick max_tick = 4;
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(max_tick + 1);
    for (std::size_t index = 0; index < total; ++index) {
      std::size_t rest = index;
      BidProfile b(n);
      for (int i = 0; i < n; ++i) {
        b[i] = static_cast<Tick>(rest % (max_tick + 1));
        rest /= static_cast<std::size_t>(max_tick + 1);
      }
      WinnerSet a = optimal_allocation(f, b);
      CHECK(social_welfare(a, b) == oracle_max_welfare(f, b));
      CHECK(f.contains(a));
      // Zero-exclusion: no removable zero bidder stays in.
      for (int i = 0; i < n; ++i) {
        if (b[i] == 0 && wins(a, i)) {
          CHECK_FALSE(f.contains(a & ~(WinnerSet{1} << i)));
        }
      }
    }
  }
}

TEST_CASE("min cost allocation follows the spec examples") {
  Family singles = Family::from_sets(3, {0b001u, 0b010u, 0b100u});
  CHECK(min_cost_allocation(singles, {1, 4, 4}) == 0b001u);   // 0.25

  Family pair = Family::from_sets(3, {0b011u, 0b100u});
  CHECK(min_cost_allocation(pair, {0, 4, 4}, 0) == 0b011u);   // cost 1.0
  CHECK(social_cost(min_cost_allocation(pair, {0, 4, 4}, 0), {0, 4, 4}) == 4);

  CHECK_THROWS_AS(min_cost_allocation(pair, {0, 4, 4}, 3), InfeasibleError);
  Family no2 = Family::from_sets(3, {0b001u, 0b010u});
  CHECK_THROWS_AS(min_cost_allocation(no2, {1, 1, 1}, 2), InfeasibleError);
}

TEST_CASE("min cost tie chain prefers smaller then lexicographic sets") {
  // Equal-cost tie between {0,1} and {2}: the singleton wins.
  Family pair = Family::from_sets(3, {0b011u, 0b100u});
  CHECK(min_cost_allocation(pair, {0, 4, 4}) == 0b100u);
  // Equal cost and equal size: {0,2} beats {1,2} lexicographically.
  Family same_size = Family::from_sets(3, {0b110u, 0b101u});
  CHECK(min_cost_allocation(same_size, {1, 1, 1}) == 0b101u);
  CHECK(min_cost_allocation(same_size, {1, 1, 1}, 1) == 0b110u);
}

TEST_CASE("min cost matches the exhaustive oracle") {
  Family f = Family::from_sets(4, {0b0011u, 0b1100u, 0b0110u, 0b1000u});
  for (Tick a = 0; a <= 2; ++a) {
    for (Tick b = 0; b <= 2; ++b) {
      for (Tick c = 0; c <= 2; ++c) {
        for (Tick d = 0; d <= 2; ++d) {
          BidProfile costs{a, b, c, d};
          CHECK(social_cost(min_cost_allocation(f, costs), costs) == oracle_min_cost(f, costs));
          CHECK(social_cost(min_cost_allocation(f, costs, 3), costs) ==
                oracle_min_cost(f, costs, 3));
        }
      }
    }
  }
}

TEST_CASE("greedy knapsack examples") {
  // b=(0.6,0.6), weights (1,1), capacity 1: single winner at 0.6.
  WinnerSet a = greedy_knapsack_allocation({3, 3}, {Ratio(1), Ratio(1)}, Ratio(1));
  CHECK(winner_count(a) == 1);
  CHECK(social_welfare(a, {3, 3}) == 3);

  // b=(1.0,0.9,0.9), weights (2,1,1), capacity 2: {1,2} at 1.8 beats 1.0.
  a = greedy_knapsack_allocation({10, 9, 9}, {Ratio(2), Ratio(1), Ratio(1)}, Ratio(2));
  CHECK(a == 0b110u);
  CHECK(social_welfare(a, {10, 9, 9}) == 18);

  // Unconstrained capacity: all positive bidders win, zero bidders never.
  a = greedy_knapsack_allocation({4, 0, 2}, {Ratio(1), Ratio(1), Ratio(1)}, Ratio(3));
  CHECK(a == 0b101u);

  CHECK_THROWS_AS(greedy_knapsack_allocation({1, 1}, {Ratio(1)}, Ratio(1)), Error);
  CHECK_THROWS_AS(greedy_knapsack_allocation({1, 1}, {Ratio(0), Ratio(1)}, Ratio(1)),
                  ConfigError);
}

TEST_CASE("greedy knapsack is a 1/2 approximation on the full grid") {
  std::vector<Ratio> weights{Ratio(2), Ratio(2), Ratio(3)};
  Ratio capacity(4);
  SetSystemSpec spec;
  spec.kind = SetKind::kKnapsack;
  spec.n = 3;
  spec.weights = weights;
  spec.capacity = capacity;
  Family f = Family::from_spec(spec);
  for (Tick a = 0; a <= 4; ++a) {
    for (Tick b = 0; b <= 4; ++b) {
      for (Tick c = 0; c <= 4; ++c) {
        BidProfile bids{a, b, c};
        Tick greedy = social_welfare(greedy_knapsack_allocation(bids, weights, capacity), bids);
        Tick opt = oracle_max_welfare(f, bids);
        CHECK(2 * greedy >= opt);
      }
    }
  }
}

TEST_CASE("maximal in range follows the range and canonical ties") {
  GeneralSpace all = two_by_two();
  // Bids: agent 0 values x at 2, agent 1 values y at 3.
  MultiBid mb = {{0, 2}, {0, 3}};
  CHECK(mir_allocation(all, mb) == 3);
  CHECK(mir_allocation_restricted(all, mb, {1, 2}) == 2);
  CHECK(mir_allocation_restricted(all, mb, {1}) == 1);   // singleton range is forced
  MultiBid zero = {{0, 0}, {0, 0}};
  CHECK(mir_allocation(all, zero) == 0);                 // earliest index on ties
  CHECK_THROWS_AS(mir_allocation_restricted(all, mb, {}), InfeasibleError);

  // Profile (v1, 0): the agent-0 argmax over the range wins.
  MultiBid solo = {{0, 2}, {0, 0}};
  CHECK(mir_allocation_restricted(all, solo, {1, 2}) == 1);
}

TEST_CASE("mir agrees with exhaustive enumeration over the full range") {
  GeneralSpace all = two_by_two();
  GridDomain grid = GridDomain::make(Ratio(1), Ratio(1, 2));
  for (Tick a = 0; a <= grid.max_tick; ++a) {
    for (Tick b = 0; b <= grid.max_tick; ++b) {
      MultiBid mb = {{0, a}, {0, b}};
      int got = mir_allocation(all, mb);
      Tick best = -1;
      for (std::size_t idx = 0; idx < all.allocations.size(); ++idx) {
        best = std::max(best, social_welfare(all, mb, static_cast<int>(idx)));
      }
      CHECK(social_welfare(all, mb, got) == best);
    }
  }
}

TEST_CASE("measured alpha is 1 on the identity range") {
  GeneralSpace all = two_by_two();
  GridDomain grid = GridDomain::make(Ratio(1), Ratio(1, 2));
  MeasuredAlpha alpha = measured_alpha(all, grid);
  CHECK(alpha.value == Ratio(1));
  CHECK_FALSE(alpha.degenerate);
  CHECK(alpha.profiles == 9);
  CHECK(alpha.skipped == 1);
}

TEST_CASE("measured alpha matches the hand-enumerated restricted range") {
  // Range {x-only, y-only}: profile (1,1) forces ratio 1/2, everything else 1.
  std::vector<int> range{1, 2};
  GeneralSpace space = two_by_two(&range);
  GridDomain grid = GridDomain::make(Ratio(1), Ratio(1));
  MeasuredAlpha alpha = measured_alpha(space, grid);
  CHECK(alpha.value == Ratio(1, 2));
  CHECK_FALSE(alpha.degenerate);
  CHECK(alpha.profiles == 4);
  CHECK(alpha.skipped == 1);
}

TEST_CASE("measured alpha flags a degenerate range") {
  std::vector<std::vector<std::optional<std::string>>> allocs = {
      {std::nullopt},
      {std::string("x")},
  };
  std::vector<int> range{0};
  GeneralSpace space = GeneralSpace::create(allocs, &range);
  GridDomain grid = GridDomain::make(Ratio(1), Ratio(1));
  MeasuredAlpha alpha = measured_alpha(space, grid);
  CHECK(alpha.value == Ratio(0));
  CHECK(alpha.degenerate);
}

TEST_CASE("measured alpha respects the profile budget") {
  GeneralSpace all = two_by_two();
  GridDomain grid = GridDomain::make(Ratio(1), Ratio(1, 4));
  CHECK_THROWS_AS(measured_alpha(all, grid, 10), BudgetError);
}

TEST_CASE("tau over families and ranges") {
  CHECK(tau(digital_family(4)) == 4);
  CHECK(tau(k_unit_family(5, 2)) == 2);
  SetSystemSpec knap;
  knap.kind = SetKind::kKnapsack;
  knap.n = 3;
  knap.weights = {Ratio(2), Ratio(2), Ratio(3)};
  knap.capacity = Ratio(4);
  CHECK(tau(Family::from_spec(knap)) == 2);

  GeneralSpace all = two_by_two();
  CHECK(tau_range(all) == 2);
  std::vector<int> range{0, 1, 2};
  CHECK(tau_range(two_by_two(&range)) == 1);
}

TEST_CASE("max winning set containing an agent") {
  Family mixed = Family::from_sets(3, {0b001u, 0b010u, 0b100u, 0b011u});
  CHECK(max_winning_set_containing(mixed, 0) == 2);
  CHECK(max_winning_set_containing(mixed, 2) == 1);
  CHECK(max_winning_set_containing(digital_family(3), 1) == 3);
  Family pair = Family::from_sets(3, {0b011u, 0b100u});
  CHECK(max_winning_set_containing(pair, 1) == 2);
  Family never = Family::from_sets(2, {0b01u, 0u});
  CHECK_THROWS_AS(max_winning_set_containing(never, 1), InfeasibleError);
  CHECK_THROWS_AS(max_winning_set_containing(pair, 5), Error);
}
