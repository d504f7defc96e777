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

#ifndef WONKA_REPORT_HPP_
#define WONKA_REPORT_HPP_

#include <string>
#include <vector>

#include "wonka/harness.hpp"
#include "wonka/structure.hpp"
#include "wonka/verifier.hpp"

// CSV report rendering. All money appears as exact rational strings ("3/4",
// "1/2"), never as floats. Binary profiles join agents with '|'; general
// profiles additionally join each agent's nonempty-allocation coordinates
// with '~'. Output is deterministic byte-for-byte for identical inputs.
namespace wonka {

std::string profile_string(const GridDomain& grid, const BidProfile& bids);

// One agent's bid vector, nonempty coordinates only, joined by '~'.
std::string agent_bid_string(const GridDomain& grid, const std::vector<Tick>& bid);

std::string multibid_string(const GridDomain& grid, const GeneralSpace& space, const MultiBid& mb);

// Columns: agent,allocation,payment
std::string render_outcome_csv(const GridDomain& grid, const Outcome& outcome);
std::string render_general_outcome_csv(const GridDomain& grid, const GeneralSpace& space,
                                       const GeneralOutcome& outcome);

// Columns: kind,agent,true_type,misreport,truthful_extreme,dishonest_extreme,
//          truthful_profile,dishonest_profile
std::string render_witness_csv(const GridDomain& grid,
                               const std::vector<ManipulationWitness>& witnesses);
std::string render_general_witness_csv(const GridDomain& grid, const GeneralSpace& space,
                                       const std::vector<GeneralManipulationWitness>& witnesses);

// Columns: agent,bid,golden_ticket,golden_profile,wooden_spoon,spoon_profile,
//          zero_margin,zero_margin_profile
std::string render_structure_csv(const GridDomain& grid, const std::vector<StructureRow>& rows);
std::string render_general_structure_csv(const GridDomain& grid, const GeneralSpace& space,
                                         const std::vector<GeneralStructureRow>& rows);

// Columns: profile,revenue,benchmark,ratio,excluded,designated
std::string render_ratio_csv(const GridDomain& grid, const RatioReport& report);

// Columns: profile,total_payment,second_best_cost,ratio,degenerate,golden_agent
std::string render_frugality_csv(const GridDomain& grid, const FrugalityReport& report);

// Columns: profile,agent,violation
std::string render_ir_csv(const IrReport& report);

}  // namespace wonka

#endif  // WONKA_REPORT_HPP_
