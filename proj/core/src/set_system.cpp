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

#include "wonka/set_system.hpp"

#include <algorithm>
#include <string>

namespace wonka {
namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxAgents) {
    throw ConfigError("agent count must be in [1, " + std::to_string(kMaxAgents) + "], got " +
                      std::to_string(n));
  }
}

void check_scan_budget(int n, std::size_t budget, const std::string& kind) {
  std::size_t subsets = std::size_t{1} << n;
  if (subsets > budget) {
    throw BudgetError(kind + " space over " + std::to_string(n) + " agents needs " +
                      std::to_string(subsets) + " subsets, exceeding the enumeration budget of " +
                      std::to_string(budget));
  }
}

}  // namespace

bool canonical_less(WinnerSet a, WinnerSet b) {
  int ca = std::popcount(a);
  int cb = std::popcount(b);
  if (ca != cb) return ca > cb;
  WinnerSet x = a;
  WinnerSet y = b;
  while (x != 0 && y != 0) {
    int ea = std::countr_zero(x);
    int eb = std::countr_zero(y);
    if (ea != eb) return ea < eb;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

std::vector<WinnerSet> enumerate_feasible(const SetSystemSpec& spec, std::size_t budget) {
  check_n(spec.n);
  const WinnerSet full = (spec.n == 32) ? ~WinnerSet{0} : ((WinnerSet{1} << spec.n) - 1);
  std::vector<WinnerSet> out;
  switch (spec.kind) {
    case SetKind::kDigitalGoods: {
      check_scan_budget(spec.n, budget, "digital_goods");
      out.reserve(std::size_t{1} << spec.n);
      for (WinnerSet s = 0; s <= full; ++s) out.push_back(s);
      break;
    }
    case SetKind::kSingleItem: {
      out.push_back(0);
      for (int i = 0; i < spec.n; ++i) out.push_back(WinnerSet{1} << i);
      break;
    }
    case SetKind::kKUnit: {
      if (spec.k < 1 || spec.k > spec.n) {
        throw ConfigError("k_unit requires 1 <= k <= n, got k=" + std::to_string(spec.k));
      }
      check_scan_budget(spec.n, budget, "k_unit");
      for (WinnerSet s = 0; s <= full; ++s) {
        if (std::popcount(s) <= spec.k) out.push_back(s);
      }
      break;
    }
    case SetKind::kKnapsack: {
      if (static_cast<int>(spec.weights.size()) != spec.n) {
        throw ConfigError("knapsack needs one weight per agent");
      }
      for (const Ratio& w : spec.weights) {
        if (w <= 0) throw ConfigError("knapsack weights must be positive");
      }
      if (spec.capacity < 0) throw ConfigError("knapsack capacity must be nonnegative");
      check_scan_budget(spec.n, budget, "knapsack");
      for (WinnerSet s = 0; s <= full; ++s) {
        Ratio load{0};
        for (int i = 0; i < spec.n; ++i) {
          if (wins(s, i)) load += spec.weights[i];
        }
        if (load <= spec.capacity) out.push_back(s);
      }
      break;
    }
    case SetKind::kExplicit: {
      if (spec.family.empty() && !spec.include_empty) {
        throw ConfigError("explicit family must be nonempty");
      }
      out = spec.family;
      for (WinnerSet s : out) {
        if ((s & ~full) != 0) {
          throw ConfigError("explicit family contains an agent index outside [0, n)");
        }
      }
      if (spec.include_empty &&
          std::find(out.begin(), out.end(), WinnerSet{0}) == out.end()) {
        out.push_back(0);
      }
      if (out.size() > budget) {
        throw BudgetError("explicit family has " + std::to_string(out.size()) +
                          " sets, exceeding the enumeration budget of " + std::to_string(budget));
      }
      std::vector<WinnerSet> probe = out;
      std::sort(probe.begin(), probe.end());
      if (std::adjacent_find(probe.begin(), probe.end()) != probe.end()) {
        throw ConfigError("explicit family contains duplicate sets");
      }
      break;
    }
  }
  if (out.size() > budget) {
    throw BudgetError("feasible family has " + std::to_string(out.size()) +
                      " sets, exceeding the enumeration budget of " + std::to_string(budget));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Family Family::from_spec(const SetSystemSpec& spec, std::size_t budget) {
  Family family;
  family.n_ = spec.n;
  family.sets_ = enumerate_feasible(spec, budget);
  family.by_mask_ = family.sets_;
  std::sort(family.by_mask_.begin(), family.by_mask_.end());
  return family;
}

Family Family::from_sets(int n, std::vector<WinnerSet> sets) {
  SetSystemSpec spec;
  spec.kind = SetKind::kExplicit;
  spec.n = n;
  spec.family = std::move(sets);
  return from_spec(spec);
}

bool Family::contains(WinnerSet set) const {
  return std::binary_search(by_mask_.begin(), by_mask_.end(), set);
}

int Family::tau() const {
  return sets_.empty() ? 0 : std::popcount(sets_.front());
}

int Family::tau_excluding(WinnerSet excluded) const {
  for (WinnerSet s : sets_) {
    if ((s & excluded) == 0) return std::popcount(s);  // canonical order: first hit is largest
  }
  return 0;
}

int Family::max_size_containing(int agent) const {
  for (WinnerSet s : sets_) {
    if (wins(s, agent)) return std::popcount(s);
  }
  return 0;
}

bool Family::can_lose(int agent) const {
  for (WinnerSet s : sets_) {
    if (!wins(s, agent)) return true;
  }
  return false;
}

}  // namespace wonka
