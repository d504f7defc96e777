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

#include "wonka/mechanisms.hpp"

#include <algorithm>
#include <string>

namespace wonka {
namespace {

void check_profile(const MechanismConfig& cfg, const BidProfile& bids) {
  if (static_cast<int>(bids.size()) != agent_count(cfg)) {
    throw Error("bid profile does not match the agent count");
  }
  for (Tick b : bids) {
    if (b < 0 || b > cfg.grid.max_tick) {
      throw Error("bid tick outside the grid");
    }
  }
}

const BinarySpoonEntry* find_binary_spoon(const MechanismConfig& cfg, int agent, Tick bid) {
  const BinarySpoonEntry* wildcard = nullptr;
  for (const auto& entry : cfg.spoons.binary) {
    if (entry.agent != agent) continue;
    if (entry.bid.has_value()) {
      if (*entry.bid == bid) return &entry;
    } else if (wildcard == nullptr) {
      wildcard = &entry;
    }
  }
  return wildcard;
}

const GeneralSpoonEntry* find_general_spoon(const MechanismConfig& cfg, int agent,
                                            const std::vector<Tick>& bid) {
  const GeneralSpoonEntry* wildcard = nullptr;
  for (const auto& entry : cfg.spoons.general) {
    if (entry.agent != agent) continue;
    if (entry.bid.has_value()) {
      if (*entry.bid == bid) return &entry;
    } else if (wildcard == nullptr) {
      wildcard = &entry;
    }
  }
  return wildcard;
}

// Lowest-paying winner; ties rotate by the profile's total tick sum.
std::optional<int> rotating_rebate_recipient(WinnerSet winners, const std::vector<Tick>& payments,
                                             Tick tick_sum) {
  if (winners == 0) return std::nullopt;
  Tick lowest = 0;
  bool first = true;
  for (int i = 0; winners >> i; ++i) {
    if (!wins(winners, i)) continue;
    if (first || payments[i] < lowest) {
      lowest = payments[i];
      first = false;
    }
  }
  std::vector<int> tied;
  for (int i = 0; winners >> i; ++i) {
    if (wins(winners, i) && payments[i] == lowest) tied.push_back(i);
  }
  return tied[static_cast<std::size_t>(tick_sum % static_cast<Tick>(tied.size()))];
}

void check_designated(const MechanismConfig& cfg) {
  if (cfg.rule != Rule::kWonkaBinary && cfg.rule != Rule::kWonkaGeneral) {
    throw ConfigError("designated wooden spoons apply only to the wonka rules");
  }
  const GridDomain& grid = cfg.grid;
  if (cfg.rule == Rule::kWonkaGeneral) {
    if (cfg.spoons.all_h) {
      throw ConfigError("general-space designated spoons require explicit entries");
    }
    const GeneralSpace& space = *cfg.space;
    std::vector<bool> has_wildcard(space.n, false);
    for (const auto& entry : cfg.spoons.general) {
      if (entry.agent < 0 || entry.agent >= space.n) {
        throw ConfigError("designated spoon names agent " + std::to_string(entry.agent) +
                          ", outside [0, n)");
      }
      if (entry.opponents.size() + 1 != static_cast<std::size_t>(space.n)) {
        throw ConfigError("designated spoon for agent " + std::to_string(entry.agent) +
                          " must list every opponent");
      }
      int opp = 0;
      for (int j = 0; j < space.n; ++j) {
        if (j == entry.agent) continue;
        const auto& coords = entry.opponents[opp++];
        if (coords.size() != space.ids[j].size() || coords[0] != 0) {
          throw Error("designated spoon opponent coordinates are malformed");
        }
        for (Tick t : coords) {
          if (t < 0 || t > grid.max_tick) throw Error("designated spoon tick outside the grid");
        }
      }
      if (entry.bid.has_value() &&
          (entry.bid->size() != space.ids[entry.agent].size() || (*entry.bid)[0] != 0)) {
        throw Error("designated spoon bid coordinates are malformed");
      }
      if (!entry.bid.has_value()) {
        if (has_wildcard[entry.agent]) {
          throw ConfigError("agent " + std::to_string(entry.agent) +
                            " has duplicate wildcard designated-spoon entries");
        }
        has_wildcard[entry.agent] = true;
      }
    }
    for (std::size_t a = 0; a < cfg.spoons.general.size(); ++a) {
      for (std::size_t b = a + 1; b < cfg.spoons.general.size(); ++b) {
        const auto& x = cfg.spoons.general[a];
        const auto& y = cfg.spoons.general[b];
        if (x.agent == y.agent && x.bid.has_value() && y.bid.has_value() && *x.bid == *y.bid) {
          throw ConfigError("agent " + std::to_string(x.agent) +
                            " has duplicate designated-spoon entries for one bid");
        }
      }
    }
    for (int i = 0; i < space.n; ++i) {
      if (!has_wildcard[i]) {
        throw ConfigError("designated spoons must be total: agent " + std::to_string(i) +
                          " needs a wildcard entry");
      }
    }
    bool all_empty_in_range = false;
    for (int idx : space.range) {
      if (std::all_of(space.allocations[idx].begin(), space.allocations[idx].end(),
                      [](int a) { return a == 0; })) {
        all_empty_in_range = true;
        break;
      }
    }
    if (!all_empty_in_range) {
      throw ConfigError(
          "designated spoons need an all-empty allocation in the range so exclusions stay "
          "feasible");
    }
    return;
  }
  // Binary rule.
  if (cfg.allocator.kind != AllocatorKind::kExactWelfare) {
    throw ConfigError("designated wooden spoons require the exact welfare allocator");
  }
  if (cfg.spoons.all_h) return;
  int n = cfg.family->n();
  std::vector<std::vector<bool>> covered(n, std::vector<bool>(cfg.grid.max_tick + 1, false));
  std::vector<bool> has_wildcard(n, false);
  for (const auto& entry : cfg.spoons.binary) {
    if (entry.agent < 0 || entry.agent >= n) {
      throw ConfigError("designated spoon names agent " + std::to_string(entry.agent) +
                        ", outside [0, n)");
    }
    if (entry.opponents.size() + 1 != static_cast<std::size_t>(n)) {
      throw ConfigError("designated spoon for agent " + std::to_string(entry.agent) +
                        " must list every opponent");
    }
    for (Tick t : entry.opponents) {
      if (t < 0 || t > grid.max_tick) throw Error("designated spoon tick outside the grid");
    }
    if (entry.bid.has_value()) {
      if (*entry.bid < 0 || *entry.bid > grid.max_tick) {
        throw Error("designated spoon bid outside the grid");
      }
      if (covered[entry.agent][*entry.bid]) {
        throw ConfigError("agent " + std::to_string(entry.agent) +
                          " has duplicate designated-spoon entries for one bid");
      }
      covered[entry.agent][*entry.bid] = true;
    } else {
      if (has_wildcard[entry.agent]) {
        throw ConfigError("agent " + std::to_string(entry.agent) +
                          " has duplicate wildcard designated-spoon entries");
      }
      has_wildcard[entry.agent] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (has_wildcard[i]) continue;
    for (Tick t = 0; t <= grid.max_tick; ++t) {
      if (!covered[i][t]) {
        throw ConfigError("designated spoons must be total: agent " + std::to_string(i) +
                          " has no entry for bid " + grid.money_string(t));
      }
    }
  }
}

}  // namespace

bool uses_general_space(const MechanismConfig& cfg) { return cfg.rule == Rule::kWonkaGeneral; }

int agent_count(const MechanismConfig& cfg) {
  return uses_general_space(cfg) ? cfg.space->n : cfg.family->n();
}

void validate_config(MechanismConfig& cfg) {
  bool procurement_rule = cfg.rule == Rule::kWonkaProcurement;
  if (procurement_rule != (cfg.setting == Setting::kProcurement)) {
    throw ConfigError("the wonka_procurement rule and the procurement setting imply each other");
  }
  if (uses_general_space(cfg)) {
    if (!cfg.space.has_value()) {
      throw ConfigError("the wonka_general rule needs an explicit allocation space");
    }
    if (cfg.set_spec.has_value() || cfg.family.has_value()) {
      throw ConfigError("the wonka_general rule takes an allocation space, not a set system");
    }
    if (cfg.allocator.kind != AllocatorKind::kMaximalInRange) {
      throw ConfigError("the wonka_general rule requires the maximal_in_range allocator");
    }
  } else {
    if (cfg.space.has_value()) {
      throw ConfigError("binary rules take a set system, not an allocation space");
    }
    if (!cfg.family.has_value()) {
      if (!cfg.set_spec.has_value()) {
        throw ConfigError("binary rules need a set system");
      }
      cfg.family = Family::from_spec(*cfg.set_spec);
    }
    if (cfg.allocator.kind == AllocatorKind::kMaximalInRange) {
      throw ConfigError("the maximal_in_range allocator applies only to wonka_general");
    }
    if (cfg.setting == Setting::kProcurement) {
      if (cfg.allocator.kind != AllocatorKind::kExactCost) {
        throw ConfigError("procurement requires the exact_cost allocator");
      }
    } else if (cfg.allocator.kind == AllocatorKind::kExactCost) {
      throw ConfigError("the exact_cost allocator applies only to procurement");
    }
    if (cfg.allocator.kind == AllocatorKind::kGreedyKnapsack &&
        (!cfg.set_spec.has_value() || cfg.set_spec->kind != SetKind::kKnapsack)) {
      throw ConfigError("the greedy_knapsack allocator needs a knapsack set system");
    }
    const Family& family = *cfg.family;
    for (int i = 0; i < family.n(); ++i) {
      if (!family.can_lose(i)) {
        throw ConfigError("agent " + std::to_string(i) +
                          " cannot lose anywhere in the feasible family");
      }
    }
    if (cfg.setting == Setting::kGoods && !family.contains(0)) {
      throw ConfigError("the empty set must be feasible in goods mode");
    }
    if (cfg.setting == Setting::kProcurement) {
      if (family.contains(0)) {
        throw ConfigError("the empty set cannot be feasible in procurement mode");
      }
      cfg.gammas.clear();
      for (int i = 0; i < family.n(); ++i) {
        if (family.max_size_containing(i) == 0) {
          throw ConfigError("agent " + std::to_string(i) +
                            " is in no feasible set; procurement needs every agent allocatable");
        }
        cfg.gammas.push_back(golden_ticket_profile(i, 0, family, cfg.grid));
      }
    }
    if (cfg.rule == Rule::kVickrey) {
      if (family.tau() != 1) {
        throw ConfigError("vickrey needs a single-item family");
      }
      for (int i = 0; i < family.n(); ++i) {
        if (!family.contains(WinnerSet{1} << i)) {
          throw ConfigError("vickrey needs every singleton feasible");
        }
      }
    }
    if (cfg.rule == Rule::kAlwaysAllocateFirstPrice) {
      WinnerSet full = (WinnerSet{1} << family.n()) - 1;
      if (!family.contains(full)) {
        throw ConfigError("always_allocate_first_price needs the full winner set feasible");
      }
    }
  }
  if (cfg.spoon_policy == SpoonPolicy::kDesignated) {
    check_designated(cfg);
  }
}

WinnerSet designated_exclusions(const MechanismConfig& cfg, const BidProfile& bids) {
  if (cfg.spoon_policy != SpoonPolicy::kDesignated) return 0;
  int n = static_cast<int>(bids.size());
  WinnerSet out = 0;
  for (int i = 0; i < n; ++i) {
    bool matched = false;
    if (cfg.spoons.all_h) {
      if (bids[i] == cfg.grid.max_tick) continue;
      matched = true;
      for (int j = 0; j < n; ++j) {
        if (j != i && bids[j] != cfg.grid.max_tick) {
          matched = false;
          break;
        }
      }
    } else {
      const BinarySpoonEntry* entry = find_binary_spoon(cfg, i, bids[i]);
      if (entry != nullptr) {
        matched = true;
        int opp = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          if (bids[j] != entry->opponents[opp++]) {
            matched = false;
            break;
          }
        }
      }
    }
    if (matched) out |= WinnerSet{1} << i;
  }
  return out;
}

WinnerSet designated_exclusions_general(const MechanismConfig& cfg, const MultiBid& mb) {
  if (cfg.spoon_policy != SpoonPolicy::kDesignated) return 0;
  int n = static_cast<int>(mb.size());
  WinnerSet out = 0;
  for (int i = 0; i < n; ++i) {
    const GeneralSpoonEntry* entry = find_general_spoon(cfg, i, mb[i]);
    if (entry == nullptr) continue;
    bool matched = true;
    int opp = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (mb[j] != entry->opponents[opp++]) {
        matched = false;
        break;
      }
    }
    if (matched) out |= WinnerSet{1} << i;
  }
  return out;
}

BidProfile golden_ticket_profile(int agent, Tick bid, const Family& family,
                                 const GridDomain& grid) {
  (void)bid;  // the profile does not depend on the trigger bid
  int k = max_winning_set_containing(family, agent);
  BidProfile opponents(static_cast<std::size_t>(family.n() - 1), grid.max_tick);
  if (k > 1) {
    WinnerSet witness = 0;
    for (WinnerSet s : family.sets()) {
      if (wins(s, agent) && std::popcount(s) == k) {
        witness = s;
        break;
      }
    }
    if (grid.max_tick % (k - 1) != 0) {
      throw ConfigError("golden ticket for agent " + std::to_string(agent) + " needs h/(k-1) = " +
                        to_money_string(grid.h / (k - 1)) +
                        " on the grid; choose delta dividing it");
    }
    Tick h_prime = grid.max_tick / (k - 1);
    for (int j = 0; j < family.n(); ++j) {
      if (j == agent || !wins(witness, j)) continue;
      opponents[static_cast<std::size_t>(j < agent ? j : j - 1)] = h_prime;
    }
  }
  return opponents;
}

Outcome wonka_binary(const MechanismConfig& cfg, const BidProfile& bids) {
  check_profile(cfg, bids);
  const Family& family = *cfg.family;
  Outcome out;
  out.setting = Setting::kGoods;
  out.excluded = designated_exclusions(cfg, bids);
  WinnerSet alloc;
  int tau_image;
  if (cfg.allocator.kind == AllocatorKind::kGreedyKnapsack) {
    alloc = greedy_knapsack_allocation(bids, cfg.set_spec->weights, cfg.set_spec->capacity);
    tau_image = family.tau();
  } else {
    alloc = optimal_allocation(family, bids, out.excluded);
    tau_image = family.tau_excluding(out.excluded);
  }
  out.winners = alloc;
  out.payments.assign(bids.size(), 0);
  Tick tick_sum = 0;
  for (std::size_t i = 0; i < bids.size(); ++i) {
    tick_sum += bids[i];
    if (wins(alloc, static_cast<int>(i))) out.payments[i] = bids[i];
  }
  if (alloc != 0 && winner_count(alloc) == tau_image) {
    out.rebate_agent = rotating_rebate_recipient(alloc, out.payments, tick_sum);
    if (out.rebate_agent.has_value()) out.payments[*out.rebate_agent] = 0;
  }
  return out;
}

GeneralOutcome wonka_general(const MechanismConfig& cfg, const MultiBid& mb) {
  const GeneralSpace& space = *cfg.space;
  validate_multibid(space, mb, cfg.grid.max_tick);
  GeneralOutcome out;
  out.excluded = designated_exclusions_general(cfg, mb);
  std::vector<int> restricted;
  for (int idx : space.range) {
    bool ok = true;
    for (int i = 0; i < space.n && ok; ++i) {
      if (wins(out.excluded, i) && space.allocations[idx][i] != 0) ok = false;
    }
    if (ok) restricted.push_back(idx);
  }
  out.chosen_index = mir_allocation_restricted(space, mb, restricted);
  out.assignment = space.allocations[out.chosen_index];
  out.payments.assign(space.n, 0);
  Tick tick_sum = 0;
  for (int i = 0; i < space.n; ++i) {
    for (Tick t : mb[i]) tick_sum += t;
    if (out.assignment[i] != 0) out.payments[i] = mb[i][out.assignment[i]];
  }
  WinnerSet winners = general_winners(out);
  int max_winners = 0;
  for (int idx : restricted) {
    int count = 0;
    for (int a : space.allocations[idx]) {
      if (a != 0) ++count;
    }
    max_winners = std::max(max_winners, count);
  }
  if (winners != 0 && winner_count(winners) == max_winners) {
    out.rebate_agent = rotating_rebate_recipient(winners, out.payments, tick_sum);
    if (out.rebate_agent.has_value()) out.payments[*out.rebate_agent] = 0;
  }
  return out;
}

Outcome wonka_procurement(const MechanismConfig& cfg, const BidProfile& bids) {
  check_profile(cfg, bids);
  const Family& family = *cfg.family;
  int n = family.n();
  Outcome out;
  out.setting = Setting::kProcurement;
  for (int i = 0; i < n; ++i) {
    bool matched = true;
    int opp = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (bids[j] != cfg.gammas[i][opp++]) {
        matched = false;
        break;
      }
    }
    if (matched) {
      out.golden_agent = i;
      break;
    }
  }
  WinnerSet alloc = out.golden_agent.has_value()
                        ? min_cost_allocation(family, bids, *out.golden_agent)
                        : min_cost_allocation(family, bids);
  out.winners = alloc;
  out.payments.assign(bids.size(), 0);
  for (int i = 0; i < n; ++i) {
    if (!wins(alloc, i)) continue;
    out.payments[i] =
        (out.golden_agent.has_value() && i == *out.golden_agent) ? cfg.grid.max_tick : bids[i];
  }
  return out;
}

Outcome vickrey(const MechanismConfig& cfg, const BidProfile& bids) {
  check_profile(cfg, bids);
  Outcome out;
  out.setting = Setting::kGoods;
  out.winners = optimal_allocation(*cfg.family, bids);
  out.payments.assign(bids.size(), 0);
  if (out.winners != 0) {
    int w = std::countr_zero(out.winners);
    Tick second = 0;
    for (std::size_t j = 0; j < bids.size(); ++j) {
      if (static_cast<int>(j) != w) second = std::max(second, bids[j]);
    }
    out.payments[w] = second;
  }
  return out;
}

Outcome first_price(const MechanismConfig& cfg, const BidProfile& bids) {
  check_profile(cfg, bids);
  Outcome out;
  out.setting = Setting::kGoods;
  out.winners = cfg.allocator.kind == AllocatorKind::kGreedyKnapsack
                    ? greedy_knapsack_allocation(bids, cfg.set_spec->weights,
                                                 cfg.set_spec->capacity)
                    : optimal_allocation(*cfg.family, bids);
  out.payments.assign(bids.size(), 0);
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (wins(out.winners, static_cast<int>(i))) out.payments[i] = bids[i];
  }
  return out;
}

Outcome always_allocate_first_price(const MechanismConfig& cfg, const BidProfile& bids) {
  check_profile(cfg, bids);
  Outcome out;
  out.setting = Setting::kGoods;
  out.winners = (WinnerSet{1} << bids.size()) - 1;
  out.payments = bids;
  return out;
}

Outcome run_mechanism(const MechanismConfig& cfg, const BidProfile& bids) {
  switch (cfg.rule) {
    case Rule::kWonkaBinary:
      return wonka_binary(cfg, bids);
    case Rule::kWonkaProcurement:
      return wonka_procurement(cfg, bids);
    case Rule::kVickrey:
      return vickrey(cfg, bids);
    case Rule::kFirstPrice:
      return first_price(cfg, bids);
    case Rule::kAlwaysAllocateFirstPrice:
      return always_allocate_first_price(cfg, bids);
    case Rule::kWonkaGeneral:
      break;
  }
  throw Error("the wonka_general rule takes multi-bids; use run_mechanism_general");
}

GeneralOutcome run_mechanism_general(const MechanismConfig& cfg, const MultiBid& mb) {
  if (cfg.rule != Rule::kWonkaGeneral) {
    throw Error("run_mechanism_general applies only to the wonka_general rule");
  }
  return wonka_general(cfg, mb);
}

}  // namespace wonka
