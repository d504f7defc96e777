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

#ifndef WONKA_VERIFIER_HPP_
#define WONKA_VERIFIER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wonka/mechanisms.hpp"

namespace wonka {

struct SweepOptions {
  std::uint64_t budget = kSweepBudget;  // max mechanism evaluations per check
  std::size_t witness_cap = 100;        // stored witnesses; violation_count still totals all
  int jobs = 1;
};

enum class WitnessKind { kBnom, kWnom };

// A strict violation of the best-case (BNOM) or worst-case (WNOM) condition:
// the dishonest extreme beats the truthful one, with the profiles attaining
// each extreme recorded so the claim can be re-evaluated independently.
struct ManipulationWitness {
  WitnessKind kind = WitnessKind::kBnom;
  int agent = 0;
  Tick true_type = 0;
  Tick misreport = 0;
  Tick truthful_extreme = 0;   // utility, in ticks
  Tick dishonest_extreme = 0;
  BidProfile truthful_profile;
  BidProfile dishonest_profile;
};

struct GeneralManipulationWitness {
  WitnessKind kind = WitnessKind::kBnom;
  int agent = 0;
  std::vector<Tick> true_type;
  std::vector<Tick> misreport;
  Tick truthful_extreme = 0;
  Tick dishonest_extreme = 0;
  MultiBid truthful_profile;
  MultiBid dishonest_profile;
};

struct NomReport {
  std::vector<ManipulationWitness> witnesses;
  std::uint64_t violation_count = 0;
  std::uint64_t evaluations = 0;
  bool pass() const { return violation_count == 0; }
};

struct GeneralNomReport {
  std::vector<GeneralManipulationWitness> witnesses;
  std::uint64_t violation_count = 0;
  std::uint64_t evaluations = 0;
  bool pass() const { return violation_count == 0; }
};

// Exhaustive sweep over (agent, type, report, opponents). Witnesses are
// ordered by (agent, type, report), BNOM before WNOM; extremes are exact
// grid max/min, no tolerance anywhere.
NomReport check_nom(const MechanismConfig& cfg, const SweepOptions& opts = {});
GeneralNomReport check_nom_general(const MechanismConfig& cfg, const SweepOptions& opts = {});

// Exact grid sup/inf of agent's utility when she reports `report` but values
// at `true_type`, over all opponent profiles.
Tick best_case_utility(const MechanismConfig& cfg, int agent, Tick true_type, Tick report);
Tick worst_case_utility(const MechanismConfig& cfg, int agent, Tick true_type, Tick report);
Tick best_case_utility_general(const MechanismConfig& cfg, int agent,
                               const std::vector<Tick>& true_type,
                               const std::vector<Tick>& report);
Tick worst_case_utility_general(const MechanismConfig& cfg, int agent,
                                const std::vector<Tick>& true_type,
                                const std::vector<Tick>& report);

// First opponent profile (sweep order) on which the agent wins for free
// (goods) or wins and is paid h (procurement); returns the full bid profile.
std::optional<BidProfile> golden_ticket_exists(const MechanismConfig& cfg, int agent, Tick bid);
// First profile on which the agent loses.
std::optional<BidProfile> wooden_spoon_exists(const MechanismConfig& cfg, int agent, Tick bid);
// General-space analogues; golden means the assignment maximizes the agent's
// reported value over the range and her payment is 0.
std::optional<MultiBid> golden_ticket_exists_general(const MechanismConfig& cfg, int agent,
                                                     const std::vector<Tick>& bid);
std::optional<MultiBid> wooden_spoon_exists_general(const MechanismConfig& cfg, int agent,
                                                    const std::vector<Tick>& bid);

// Re-runs the mechanism on the witness's attaining profiles and confirms the
// stated extremes and the strict inequality.
bool witness_sound(const MechanismConfig& cfg, const ManipulationWitness& witness);
bool witness_sound(const MechanismConfig& cfg, const GeneralManipulationWitness& witness);

struct IrViolation {
  std::string profile;
  int agent = 0;
  std::string kind;  // negative_utility | loser_pays | negative_payment
};

struct IrReport {
  std::vector<IrViolation> violations;
  std::uint64_t evaluations = 0;
  bool pass() const { return violations.empty(); }
};

// Per profile and agent: utility at the reported type >= 0; payments >= 0;
// goods losers pay exactly 0.
IrReport check_ir_and_transfers(const MechanismConfig& cfg, const SweepOptions& opts = {});

// The per-outcome predicate behind check_ir_and_transfers, exposed so tests
// can run it against hand-built (including deliberately faulty) outcomes.
std::vector<IrViolation> outcome_violations(const GridDomain& grid, const BidProfile& bids,
                                            const Outcome& outcome);
std::vector<IrViolation> outcome_violations_general(const GridDomain& grid,
                                                    const GeneralSpace& space, const MultiBid& mb,
                                                    const GeneralOutcome& outcome);

}  // namespace wonka

#endif  // WONKA_VERIFIER_HPP_
