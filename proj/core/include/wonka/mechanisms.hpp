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

#ifndef WONKA_MECHANISMS_HPP_
#define WONKA_MECHANISMS_HPP_

#include <optional>
#include <vector>

#include "wonka/allocators.hpp"
#include "wonka/domain.hpp"
#include "wonka/general_space.hpp"
#include "wonka/set_system.hpp"

namespace wonka {

enum class Rule {
  kWonkaBinary,
  kWonkaGeneral,
  kWonkaProcurement,
  kVickrey,
  kFirstPrice,               // Wonka payments with the rebate stripped
  kAlwaysAllocateFirstPrice  // everyone wins, everyone pays her bid
};

enum class SpoonPolicy { kFeasibility, kDesignated };

// One designated wooden-spoon entry for binary settings: when agent `agent`
// reports `bid` (or anything, if bid is empty) and the opponents report
// exactly `opponents` (n-1 ticks in agent order), the agent is excluded. An
// exact-bid entry takes precedence over the agent's wildcard.
struct BinarySpoonEntry {
  int agent = 0;
  std::optional<Tick> bid;
  BidProfile opponents;
};

// General-space analogue; `bid` and `opponents` entries are full coordinate
// vectors aligned to the personal-allocation lists.
struct GeneralSpoonEntry {
  int agent = 0;
  std::optional<std::vector<Tick>> bid;
  std::vector<std::vector<Tick>> opponents;
};

// The default (all_h) convention excludes an agent exactly when she is the
// unique bidder below h; custom entries replace it entirely.
struct DesignatedSpoons {
  bool all_h = true;
  std::vector<BinarySpoonEntry> binary;
  std::vector<GeneralSpoonEntry> general;
};

struct MechanismConfig {
  Setting setting = Setting::kGoods;
  Rule rule = Rule::kWonkaBinary;
  SpoonPolicy spoon_policy = SpoonPolicy::kFeasibility;
  DesignatedSpoons spoons;
  GridDomain grid;
  AllocatorSpec allocator;
  std::optional<SetSystemSpec> set_spec;
  std::optional<Family> family;       // built by validate_config when absent
  std::optional<GeneralSpace> space;  // general rule only
  std::vector<BidProfile> gammas;     // procurement golden-ticket opponent profiles
};

// Checks rule/setting/allocator/space consistency, enumerates the family
// from set_spec when needed, and precomputes procurement golden tickets.
// Throws ConfigError on any inconsistency.
void validate_config(MechanismConfig& cfg);

bool uses_general_space(const MechanismConfig& cfg);
int agent_count(const MechanismConfig& cfg);

// Designated wooden-spoon exclusions for a full profile (empty mask unless
// the policy is designated).
WinnerSet designated_exclusions(const MechanismConfig& cfg, const BidProfile& bids);
WinnerSet designated_exclusions_general(const MechanismConfig& cfg, const MultiBid& mb);

// Procurement golden-ticket opponent profile: the canonical witness set
// around the agent bids h/(k-1), everyone else bids h (all h when k = 1).
// n-1 entries in agent order; `bid` is accepted for signature parity.
BidProfile golden_ticket_profile(int agent, Tick bid, const Family& family,
                                 const GridDomain& grid);

Outcome wonka_binary(const MechanismConfig& cfg, const BidProfile& bids);
GeneralOutcome wonka_general(const MechanismConfig& cfg, const MultiBid& mb);
Outcome wonka_procurement(const MechanismConfig& cfg, const BidProfile& bids);
Outcome vickrey(const MechanismConfig& cfg, const BidProfile& bids);
Outcome first_price(const MechanismConfig& cfg, const BidProfile& bids);
Outcome always_allocate_first_price(const MechanismConfig& cfg, const BidProfile& bids);

// Dispatch on cfg.rule (binary rules only; the general rule goes through
// run_mechanism_general).
Outcome run_mechanism(const MechanismConfig& cfg, const BidProfile& bids);
GeneralOutcome run_mechanism_general(const MechanismConfig& cfg, const MultiBid& mb);

}  // namespace wonka

#endif  // WONKA_MECHANISMS_HPP_
