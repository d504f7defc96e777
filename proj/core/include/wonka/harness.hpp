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

#ifndef WONKA_HARNESS_HPP_
#define WONKA_HARNESS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wonka/verifier.hpp"

namespace wonka {

// Omniscient revenue benchmark W*: the maximum social welfare any feasible
// allocation extracts from the profile.
Tick optimal_revenue_benchmark(const Family& family, const BidProfile& bids);

// W* over the whole allocation list (not just the range).
Tick optimal_welfare_general(const GeneralSpace& space, const MultiBid& mb);

struct RatioRow {
  std::string profile;
  Tick revenue = 0;
  Tick benchmark = 0;
  std::optional<Ratio> ratio;  // absent when the benchmark is 0
  bool excluded = false;       // zero-benchmark row, left out of aggregation
  bool designated = false;     // profile matches a designated wooden spoon
};

struct RatioReport {
  std::vector<RatioRow> rows;
  std::optional<Ratio> aggregate;                        // min ratio, all priced rows
  std::optional<Ratio> aggregate_excluding_designated;   // min ratio, non-designated rows
  Ratio alpha{1};
  bool alpha_degenerate = false;
  int tau = 1;
  Ratio bound{0};          // alpha * (1 - 1/tau)
  bool satisfied = true;   // aggregate_excluding_designated >= bound
  std::uint64_t zero_benchmark_rows = 0;
  std::uint64_t designated_rows = 0;
  std::uint64_t evaluations = 0;
};

// Revenue-vs-W* sweep for goods mechanisms. Designated-spoon profiles stay in
// `aggregate` but are dropped from `aggregate_excluding_designated`, the
// number the bound is judged against: the bound presumes feasibility-forced
// losses, not engineered ones.
RatioReport competitive_ratio(const MechanismConfig& cfg, const SweepOptions& opts = {});

struct SecondBest {
  Tick cost = 0;
  bool degenerate = false;  // no allocation costs strictly more than C*
};

// Minimum social cost strictly above the optimum C*; falls back to C* with
// the degenerate flag when every feasible allocation ties.
SecondBest second_best_cost(const Family& family, const BidProfile& costs);

struct FrugalityRow {
  std::string profile;
  BidProfile profile_ticks;
  Tick total_payment = 0;
  Tick second_best = 0;
  std::optional<Ratio> ratio;  // absent on degenerate rows
  bool degenerate = false;
  std::optional<int> golden_agent;
};

struct FrugalityReport {
  std::vector<FrugalityRow> rows;
  std::optional<Ratio> aggregate;  // max ratio over non-degenerate rows
  Ratio bound{1};                  // 2 when some agent has k > 1, else 1
  bool satisfied = true;           // aggregate <= bound
  std::uint64_t degenerate_rows = 0;
  std::uint64_t evaluations = 0;
};

// FR(2) sweep for procurement: total payment against the second-best cost.
FrugalityReport fr2(const MechanismConfig& cfg, const SweepOptions& opts = {});

}  // namespace wonka

#endif  // WONKA_HARNESS_HPP_
