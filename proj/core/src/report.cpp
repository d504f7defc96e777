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

#include "wonka/report.hpp"

#include <sstream>

namespace wonka {
namespace {

const char* bool_string(bool v) { return v ? "true" : "false"; }

std::string utility_string(const GridDomain& grid, Tick ticks) {
  return to_money_string(grid.delta * static_cast<long long>(ticks));
}

std::string ratio_cell(const std::optional<Ratio>& r) {
  return r ? to_money_string(*r) : std::string();
}

}  // namespace

std::string profile_string(const GridDomain& grid, const BidProfile& bids) {
  std::string out;
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (i > 0) out += '|';
    out += grid.money_string(bids[i]);
  }
  return out;
}

std::string agent_bid_string(const GridDomain& grid, const std::vector<Tick>& bid) {
  std::string out;
  for (std::size_t c = 1; c < bid.size(); ++c) {
    if (c > 1) out += '~';
    out += grid.money_string(bid[c]);
  }
  return out;
}

std::string multibid_string(const GridDomain& grid, const GeneralSpace& space,
                            const MultiBid& mb) {
  std::string out;
  for (int i = 0; i < space.n; ++i) {
    if (i > 0) out += '|';
    out += agent_bid_string(grid, mb[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::string render_outcome_csv(const GridDomain& grid, const Outcome& outcome) {
  std::ostringstream out;
  out << "agent,allocation,payment\n";
  for (std::size_t i = 0; i < outcome.payments.size(); ++i) {
    out << i << ',' << (wins(outcome.winners, static_cast<int>(i)) ? "win" : "lose") << ','
        << grid.money_string(outcome.payments[i]) << '\n';
  }
  return out.str();
}

std::string render_general_outcome_csv(const GridDomain& grid, const GeneralSpace& space,
                                       const GeneralOutcome& outcome) {
  std::ostringstream out;
  out << "agent,allocation,payment\n";
  for (int i = 0; i < space.n; ++i) {
    std::size_t idx = static_cast<std::size_t>(i);
    out << i << ','
        << space.ids[idx][static_cast<std::size_t>(outcome.assignment[idx])] << ','
        << grid.money_string(outcome.payments[idx]) << '\n';
  }
  return out.str();
}

std::string render_witness_csv(const GridDomain& grid,
                               const std::vector<ManipulationWitness>& witnesses) {
  std::ostringstream out;
  out << "kind,agent,true_type,misreport,truthful_extreme,dishonest_extreme,truthful_profile,"
         "dishonest_profile\n";
  for (const auto& w : witnesses) {
    out << (w.kind == WitnessKind::kBnom ? "bnom" : "wnom") << ',' << w.agent << ','
        << grid.money_string(w.true_type) << ',' << grid.money_string(w.misreport) << ','
        << utility_string(grid, w.truthful_extreme) << ','
        << utility_string(grid, w.dishonest_extreme) << ','
        << profile_string(grid, w.truthful_profile) << ','
        << profile_string(grid, w.dishonest_profile) << '\n';
  }
  return out.str();
}

std::string render_general_witness_csv(const GridDomain& grid, const GeneralSpace& space,
                                       const std::vector<GeneralManipulationWitness>& witnesses) {
  std::ostringstream out;
  out << "kind,agent,true_type,misreport,truthful_extreme,dishonest_extreme,truthful_profile,"
         "dishonest_profile\n";
  for (const auto& w : witnesses) {
    out << (w.kind == WitnessKind::kBnom ? "bnom" : "wnom") << ',' << w.agent << ','
        << agent_bid_string(grid, w.true_type) << ',' << agent_bid_string(grid, w.misreport)
        << ',' << utility_string(grid, w.truthful_extreme) << ','
        << utility_string(grid, w.dishonest_extreme) << ','
        << multibid_string(grid, space, w.truthful_profile) << ','
        << multibid_string(grid, space, w.dishonest_profile) << '\n';
  }
  return out.str();
}

std::string render_structure_csv(const GridDomain& grid, const std::vector<StructureRow>& rows) {
  std::ostringstream out;
  out << "agent,bid,golden_ticket,golden_profile,wooden_spoon,spoon_profile,zero_margin,"
         "zero_margin_profile\n";
  for (const auto& r : rows) {
    out << r.agent << ',' << grid.money_string(r.bid) << ',' << bool_string(r.golden_ticket)
        << ',' << (r.golden_profile ? profile_string(grid, *r.golden_profile) : std::string())
        << ',' << bool_string(r.wooden_spoon) << ','
        << (r.spoon_profile ? profile_string(grid, *r.spoon_profile) : std::string()) << ','
        << bool_string(r.zero_margin) << ','
        << (r.zero_margin_profile ? profile_string(grid, *r.zero_margin_profile) : std::string())
        << '\n';
  }
  return out.str();
}

std::string render_general_structure_csv(const GridDomain& grid, const GeneralSpace& space,
                                         const std::vector<GeneralStructureRow>& rows) {
  std::ostringstream out;
  out << "agent,bid,golden_ticket,golden_profile,wooden_spoon,spoon_profile,zero_margin,"
         "zero_margin_profile\n";
  for (const auto& r : rows) {
    out << r.agent << ',' << agent_bid_string(grid, r.bid) << ','
        << bool_string(r.golden_ticket) << ','
        << (r.golden_profile ? multibid_string(grid, space, *r.golden_profile) : std::string())
        << ',' << bool_string(r.wooden_spoon) << ','
        << (r.spoon_profile ? multibid_string(grid, space, *r.spoon_profile) : std::string())
        << ',' << bool_string(r.zero_margin) << ','
        << (r.zero_margin_profile ? multibid_string(grid, space, *r.zero_margin_profile)
                                  : std::string())
        << '\n';
  }
  return out.str();
}

std::string render_ratio_csv(const GridDomain& grid, const RatioReport& report) {
  std::ostringstream out;
  out << "profile,revenue,benchmark,ratio,excluded,designated\n";
  for (const auto& r : report.rows) {
    out << r.profile << ',' << grid.money_string(r.revenue) << ','
        << grid.money_string(r.benchmark) << ',' << ratio_cell(r.ratio) << ','
        << bool_string(r.excluded) << ',' << bool_string(r.designated) << '\n';
  }
  return out.str();
}

std::string render_frugality_csv(const GridDomain& grid, const FrugalityReport& report) {
  std::ostringstream out;
  out << "profile,total_payment,second_best_cost,ratio,degenerate,golden_agent\n";
  for (const auto& r : report.rows) {
    out << r.profile << ',' << grid.money_string(r.total_payment) << ','
        << grid.money_string(r.second_best) << ',' << ratio_cell(r.ratio) << ','
        << bool_string(r.degenerate) << ',';
    if (r.golden_agent) out << *r.golden_agent;
    out << '\n';
  }
  return out.str();
}

std::string render_ir_csv(const IrReport& report) {
  std::ostringstream out;
  out << "profile,agent,violation\n";
  for (const auto& v : report.violations) {
    out << v.profile << ',' << v.agent << ',' << v.kind << '\n';
  }
  return out.str();
}

}  // namespace wonka
