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

#include <optional>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "wonka/allocators.hpp"
#include "wonka/harness.hpp"
#include "wonka/mechanisms.hpp"
#include "wonka/set_system.hpp"
#include "wonka/verifier.hpp"

namespace {

using namespace wonka;

MechanismConfig k_unit_config(int n, int k, const Ratio& delta) {
  MechanismConfig cfg;
  cfg.rule = Rule::kWonkaBinary;
  cfg.grid = GridDomain::make(Ratio(1), delta);
  SetSystemSpec spec;
  spec.kind = SetKind::kKUnit;
  spec.n = n;
  spec.k = k;
  cfg.set_spec = spec;
  validate_config(cfg);
  return cfg;
}

MechanismConfig pair_procurement_config(const Ratio& delta) {
  MechanismConfig cfg;
  cfg.setting = Setting::kProcurement;
  cfg.rule = Rule::kWonkaProcurement;
  cfg.allocator.kind = AllocatorKind::kExactCost;
  cfg.grid = GridDomain::make(Ratio(1), delta);
  SetSystemSpec spec;
  spec.kind = SetKind::kExplicit;
  spec.n = 3;
  spec.family = {0b011u, 0b100u};
  cfg.set_spec = spec;
  validate_config(cfg);
  return cfg;
}

MechanismConfig general_config() {
  MechanismConfig cfg;
  cfg.rule = Rule::kWonkaGeneral;
  cfg.allocator.kind = AllocatorKind::kMaximalInRange;
  cfg.grid = GridDomain::make(Ratio(1), Ratio(1, 2));
  std::vector<std::vector<std::optional<std::string>>> allocs = {
      {std::nullopt, std::nullopt},
      {std::string("A"), std::nullopt},
      {std::nullopt, std::string("b")},
      {std::string("A"), std::string("b")},
  };
  cfg.space = GeneralSpace::create(allocs);
  validate_config(cfg);
  return cfg;
}

void BM_EnumerateKUnit(benchmark::State& state) {
  SetSystemSpec spec;
  spec.kind = SetKind::kKUnit;
  spec.n = static_cast<int>(state.range(0));
  spec.k = spec.n / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_feasible(spec));
  }
}
BENCHMARK(BM_EnumerateKUnit)->Arg(8)->Arg(12)->Arg(16);

void BM_EnumerateKnapsack(benchmark::State& state) {
  SetSystemSpec spec;
  spec.kind = SetKind::kKnapsack;
  spec.n = static_cast<int>(state.range(0));
  for (int i = 0; i < spec.n; ++i) spec.weights.push_back(Ratio(i % 4 + 1, 2));
  spec.capacity = Ratio(spec.n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_feasible(spec));
  }
}
BENCHMARK(BM_EnumerateKnapsack)->Arg(8)->Arg(12);

void BM_OptimalAllocation(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SetSystemSpec spec;
  spec.kind = SetKind::kKUnit;
  spec.n = n;
  spec.k = n / 2;
  Family family = Family::from_spec(spec);
  BidProfile bids;
  for (int i = 0; i < n; ++i) bids.push_back((i * 3 + 1) % 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_allocation(family, bids));
  }
}
BENCHMARK(BM_OptimalAllocation)->Arg(8)->Arg(12);

void BM_MinCostAllocation(benchmark::State& state) {
  Family family = Family::from_sets(4, {0b0011u, 0b1100u, 0b0110u, 0b1001u});
  BidProfile costs = {3, 1, 4, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_cost_allocation(family, costs, 0));
  }
}
BENCHMARK(BM_MinCostAllocation);

void BM_MirAllocation(benchmark::State& state) {
  MechanismConfig cfg = general_config();
  MultiBid mb = {{0, 2}, {0, 1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mir_allocation(*cfg.space, mb));
  }
}
BENCHMARK(BM_MirAllocation);

void BM_RunMechanismBinary(benchmark::State& state) {
  MechanismConfig cfg = k_unit_config(3, 2, Ratio(1, 4));
  BidProfile bids = {2, 3, 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_mechanism(cfg, bids));
  }
}
BENCHMARK(BM_RunMechanismBinary);

void BM_CheckNomKUnit(benchmark::State& state) {
  MechanismConfig cfg = k_unit_config(3, 2, Ratio(1, state.range(0)));
  SweepOptions opts;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_nom(cfg, opts));
  }
}
BENCHMARK(BM_CheckNomKUnit)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CheckNomProcurement(benchmark::State& state) {
  MechanismConfig cfg = pair_procurement_config(Ratio(1, 4));
  SweepOptions opts;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_nom(cfg, opts));
  }
}
BENCHMARK(BM_CheckNomProcurement)->Unit(benchmark::kMillisecond);

void BM_CheckNomGeneral(benchmark::State& state) {
  MechanismConfig cfg = general_config();
  SweepOptions opts;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_nom_general(cfg, opts));
  }
}
BENCHMARK(BM_CheckNomGeneral);

void BM_CompetitiveRatio(benchmark::State& state) {
  MechanismConfig cfg = k_unit_config(3, 2, Ratio(1, state.range(0)));
  SweepOptions opts;
  for (auto _ : state) {
    benchmark::DoNotOptimize(competitive_ratio(cfg, opts));
  }
}
BENCHMARK(BM_CompetitiveRatio)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Frugality(benchmark::State& state) {
  MechanismConfig cfg = pair_procurement_config(Ratio(1, state.range(0)));
  SweepOptions opts;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fr2(cfg, opts));
  }
}
BENCHMARK(BM_Frugality)->Arg(4)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MeasuredAlpha(benchmark::State& state) {
  MechanismConfig cfg = general_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(measured_alpha(*cfg.space, cfg.grid));
  }
}
BENCHMARK(BM_MeasuredAlpha);

}  // namespace

BENCHMARK_MAIN();
