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

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wonka/config.hpp"
#include "wonka/harness.hpp"
#include "wonka/report.hpp"
#include "wonka/structure.hpp"
#include "wonka/verifier.hpp"

namespace {

using namespace wonka;

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, msg)                                                      \
  do {                                                                          \
    if (!(cond)) {                                                              \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg       \
                << "\n";                                                        \
      std::exit(1);                                                             \
    }                                                                           \
  } while (0)

std::string g_config_dir;

HarnessConfig load(const std::string& name) {
  return load_config(g_config_dir + "/" + name);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Criterion 1: check_nom passes, exactly and in under 10 seconds, on every
// Wonka configuration.

void require_nom_pass(const char* name) {
  HarnessConfig hc = load(name);
  auto start = std::chrono::steady_clock::now();
  std::uint64_t violations;
  if (uses_general_space(hc.mechanism)) {
    GeneralNomReport report = check_nom_general(hc.mechanism);
    violations = report.violation_count;
    REQUIRE(report.witnesses.empty(), name << ": unexpected witnesses");
  } else {
    NomReport report = check_nom(hc.mechanism);
    violations = report.violation_count;
    REQUIRE(report.witnesses.empty(), name << ": unexpected witnesses");
  }
  double elapsed = seconds_since(start);
  REQUIRE(violations == 0, name << ": " << violations << " NOM violations");
  REQUIRE(elapsed < 10.0, name << ": sweep took " << elapsed << "s");
}

void criterion_1() {
  require_nom_pass("m1_kunit.json");
  require_nom_pass("m1_digital_designated.json");
  require_nom_pass("m2_general.json");
  require_nom_pass("m3_singleton.json");
  require_nom_pass("m3_pair.json");
  std::cout << "[PASS] 1. NOM certification: all five Wonka configurations sweep clean\n";
}

// ---------------------------------------------------------------------------
// Criterion 2: the stripped mechanisms are caught, with sound witnesses.

void criterion_2() {
  HarnessConfig fp = load("first_price_digital.json");
  NomReport r = check_nom(fp.mechanism);
  REQUIRE(!r.pass(), "first-price-everyone must fail NOM");
  bool has_bnom = false;
  for (const ManipulationWitness& w : r.witnesses) {
    REQUIRE(witness_sound(fp.mechanism, w), "unsound first-price witness");
    has_bnom = has_bnom || w.kind == WitnessKind::kBnom;
  }
  REQUIRE(has_bnom, "first-price-everyone needs a BNOM witness");

  HarnessConfig stripped = load("m1_kunit_no_rebate.json");
  r = check_nom(stripped.mechanism);
  REQUIRE(!r.pass(), "the rebate-stripped mechanism must fail NOM");
  has_bnom = false;
  for (const ManipulationWitness& w : r.witnesses) {
    REQUIRE(witness_sound(stripped.mechanism, w), "unsound no-rebate witness");
    has_bnom = has_bnom || w.kind == WitnessKind::kBnom;
  }
  REQUIRE(has_bnom, "the rebate-stripped mechanism needs a BNOM witness");

  // With the rebate in place every positive bid keeps its golden ticket;
  // stripping the rebate removes them, which is exactly why BNOM breaks.
  HarnessConfig intact = load("m1_kunit.json");
  for (int agent = 0; agent < agent_count(intact.mechanism); ++agent) {
    for (Tick bid = 1; bid <= intact.mechanism.grid.max_tick; ++bid) {
      REQUIRE(golden_ticket_exists(intact.mechanism, agent, bid).has_value(),
              "mechanism 1 lost a golden ticket at agent " << agent << " bid " << bid);
      REQUIRE(!golden_ticket_exists(stripped.mechanism, agent, bid).has_value(),
              "the stripped mechanism should price every win");
    }
  }

  HarnessConfig aa = load("always_allocate_digital.json");
  r = check_nom(aa.mechanism);
  REQUIRE(!r.pass(), "always-allocate must fail NOM");
  bool has_underbid_wnom = false;
  for (const ManipulationWitness& w : r.witnesses) {
    REQUIRE(witness_sound(aa.mechanism, w), "unsound always-allocate witness");
    if (w.kind == WitnessKind::kWnom && w.misreport < w.true_type) has_underbid_wnom = true;
  }
  REQUIRE(has_underbid_wnom, "always-allocate needs a WNOM underbid witness");

  std::cout << "[PASS] 2. known-manipulable sanity: BNOM/WNOM witnesses found and re-evaluated\n";
}

// ---------------------------------------------------------------------------
// Criterion 3: the alpha(1 - 1/tau) revenue bound, exactly.

void criterion_3() {
  RatioReport kunit = competitive_ratio(load("m1_kunit.json").mechanism);
  REQUIRE(kunit.aggregate.has_value(), "k-unit ratio sweep produced no priced rows");
  REQUIRE(*kunit.aggregate >= Ratio(1, 2), "k-unit aggregate fell below 1/2");
  REQUIRE(kunit.tau == 2, "k-unit tau should be 2");
  REQUIRE(kunit.satisfied, "k-unit bound violated");

  RatioReport digital = competitive_ratio(load("m1_digital_designated.json").mechanism);
  REQUIRE(digital.aggregate_excluding_designated.has_value(),
          "digital ratio sweep produced no judged rows");
  REQUIRE(*digital.aggregate_excluding_designated >= Ratio(2, 3),
          "digital aggregate (excluding designated spoons) fell below 2/3");
  REQUIRE(digital.satisfied, "digital bound violated");

  std::cout << "[PASS] 3. revenue bound: 1/2 on 2-unit and 2/3 on digital goods, exact\n";
}

// ---------------------------------------------------------------------------
// Criterion 4: Vickrey is NOM and its ratio degenerates to 0 at (1, 0, 0).

void criterion_4() {
  HarnessConfig vick = load("vickrey.json");
  REQUIRE(check_nom(vick.mechanism).pass(), "vickrey must pass NOM");

  RatioReport r = competitive_ratio(vick.mechanism);
  REQUIRE(r.aggregate.has_value(), "vickrey ratio sweep produced no priced rows");
  REQUIRE(*r.aggregate == Ratio(0), "vickrey aggregate must be exactly 0");
  bool witnessed = false;
  for (const RatioRow& row : r.rows) {
    if (row.profile == "1|0|0") {
      witnessed = row.ratio.has_value() && *row.ratio == Ratio(0);
    }
  }
  REQUIRE(witnessed, "profile (1, 0, 0) must witness ratio 0");
  REQUIRE(r.bound == Ratio(0), "vickrey bound must be 0 at tau = 1");
  REQUIRE(r.satisfied, "vickrey bound violated");

  std::cout << "[PASS] 4. vickrey reference: NOM holds and the free win at (1,0,0) prices 0\n";
}

// ---------------------------------------------------------------------------
// Criterion 5: frugality, exactly at the closed forms.

void require_golden_totals(const MechanismConfig& cfg, const FrugalityReport& report,
                           const char* name) {
  Tick h = cfg.grid.max_tick;
  bool saw_golden = false;
  for (const FrugalityRow& row : report.rows) {
    if (!row.golden_agent.has_value()) continue;
    saw_golden = true;
    Tick expected = cfg.family->max_size_containing(*row.golden_agent) > 1 ? 2 * h : h;
    REQUIRE(row.total_payment == expected,
            name << ": golden row " << row.profile << " pays " << row.total_payment
                 << " ticks, expected " << expected);
  }
  REQUIRE(saw_golden, name << ": no golden-ticket rows found");
}

void criterion_5() {
  HarnessConfig fine = load("m3_pair_fine.json");
  FrugalityReport r = fr2(fine.mechanism);
  REQUIRE(r.aggregate.has_value(), "fine-grid frugality produced no rows");
  REQUIRE(*r.aggregate <= Ratio(2), "FR(2) exceeded 2");
  Ratio delta = fine.mechanism.grid.delta;
  Ratio lower = Ratio(2) - Ratio(2) * delta / (Ratio(1) + delta);
  REQUIRE(*r.aggregate >= lower, "FR(2) fell below 2 - 2d/(1+d)");
  REQUIRE(r.satisfied, "pair frugality bound violated");
  require_golden_totals(fine.mechanism, r, "m3_pair_fine");

  HarnessConfig pair = load("m3_pair.json");
  require_golden_totals(pair.mechanism, fr2(pair.mechanism), "m3_pair");

  HarnessConfig singles = load("m3_singleton.json");
  FrugalityReport s = fr2(singles.mechanism);
  REQUIRE(s.aggregate.has_value(), "singleton frugality produced no rows");
  REQUIRE(*s.aggregate == Ratio(1), "singleton FR(2) must be exactly 1");
  REQUIRE(s.satisfied, "singleton frugality bound violated");
  require_golden_totals(singles.mechanism, s, "m3_singleton");

  std::cout << "[PASS] 5. FR(2): within [2 - 2d/(1+d), 2] on the pair family, 1 on singletons, "
               "golden rows total 2h/h\n";
}

// ---------------------------------------------------------------------------
// Criterion 6: allocators against independent exhaustive oracles.

void sweep_profiles(int n, Tick base, const std::function<void(const BidProfile&)>& body) {
  BidProfile bids(static_cast<std::size_t>(n), 0);
  while (true) {
    body(bids);
    int i = 0;
    while (i < n && bids[static_cast<std::size_t>(i)] == base - 1) {
      bids[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) return;
    ++bids[static_cast<std::size_t>(i)];
  }
}

void check_welfare_oracle(const Family& family, Tick base) {
  sweep_profiles(family.n(), base, [&](const BidProfile& bids) {
    Tick best = 0;
    for (WinnerSet s : family.sets()) best = std::max(best, social_welfare(s, bids));
    WinnerSet chosen = optimal_allocation(family, bids);
    REQUIRE(social_welfare(chosen, bids) == best, "optimal_allocation missed the optimum");
    bool valid = false;
    for (WinnerSet s : family.sets()) {
      if ((chosen & ~s) != 0) continue;
      bool dropped_only_zeros = true;
      for (int i = 0; i < family.n(); ++i) {
        if (wins(s, i) && !wins(chosen, i) && bids[static_cast<std::size_t>(i)] != 0) {
          dropped_only_zeros = false;
          break;
        }
      }
      if (dropped_only_zeros) {
        valid = true;
        break;
      }
    }
    REQUIRE(valid, "optimal_allocation returned an infeasible winner set");
  });
}

void check_cost_oracle(const Family& family, Tick base, int must_include) {
  sweep_profiles(family.n(), base, [&](const BidProfile& costs) {
    std::optional<Tick> best;
    for (WinnerSet s : family.sets()) {
      if (must_include >= 0 && !wins(s, must_include)) continue;
      Tick c = social_cost(s, costs);
      if (!best || c < *best) best = c;
    }
    WinnerSet chosen = must_include >= 0 ? min_cost_allocation(family, costs, must_include)
                                         : min_cost_allocation(family, costs);
    REQUIRE(family.contains(chosen), "min_cost_allocation left the family");
    REQUIRE(best.has_value() && social_cost(chosen, costs) == *best,
            "min_cost_allocation missed the optimum");
    if (must_include >= 0) {
      REQUIRE(wins(chosen, must_include), "min_cost_allocation dropped the forced agent");
    }
  });
}

void criterion_6() {
  HarnessConfig kunit = load("m1_kunit.json");
  check_welfare_oracle(*kunit.mechanism.family, kunit.mechanism.grid.n_ticks());
  HarnessConfig digital = load("m1_digital_designated.json");
  check_welfare_oracle(*digital.mechanism.family, digital.mechanism.grid.n_ticks());
  HarnessConfig vick = load("vickrey.json");
  check_welfare_oracle(*vick.mechanism.family, vick.mechanism.grid.n_ticks());

  SetSystemSpec wide;
  wide.kind = SetKind::kExplicit;
  wide.n = 4;
  wide.family = {0b0011u, 0b1100u, 0b0110u, 0b1000u};
  wide.include_empty = true;
  Family four = Family::from_spec(wide);
  check_welfare_oracle(four, 3);   // 81 profiles on a delta = 1/2 grid

  HarnessConfig pair = load("m3_pair.json");
  check_cost_oracle(*pair.mechanism.family, pair.mechanism.grid.n_ticks(), -1);
  check_cost_oracle(*pair.mechanism.family, pair.mechanism.grid.n_ticks(), 0);
  HarnessConfig singles = load("m3_singleton.json");
  check_cost_oracle(*singles.mechanism.family, singles.mechanism.grid.n_ticks(), -1);
  wide.include_empty = false;
  Family four_cost = Family::from_spec(wide);
  check_cost_oracle(four_cost, 3, -1);
  check_cost_oracle(four_cost, 3, 1);

  // Greedy knapsack keeps at least half the optimum on the full grid.
  std::vector<Ratio> weights{Ratio(2), Ratio(2), Ratio(3)};
  Ratio capacity{4};
  SetSystemSpec knap;
  knap.kind = SetKind::kKnapsack;
  knap.n = 3;
  knap.weights = weights;
  knap.capacity = capacity;
  Family knap_family = Family::from_spec(knap);
  sweep_profiles(3, 5, [&](const BidProfile& bids) {
    Tick best = 0;
    for (WinnerSet s : knap_family.sets()) best = std::max(best, social_welfare(s, bids));
    WinnerSet greedy = greedy_knapsack_allocation(bids, weights, capacity);
    REQUIRE(2 * social_welfare(greedy, bids) >= best, "greedy fell below half the optimum");
  });

  // Measured alpha: exactly 1 when the range is everything, and the
  // hand-enumerated 1/2 when the bundle allocation is withheld.
  HarnessConfig m2 = load("m2_general.json");
  MeasuredAlpha full = measured_alpha(*m2.mechanism.space, m2.mechanism.grid);
  REQUIRE(full.value == Ratio(1), "alpha must be 1 when the range is the whole space");
  REQUIRE(!full.degenerate, "full-range alpha came back degenerate");

  std::vector<std::vector<std::optional<std::string>>> allocs = {
      {std::nullopt, std::nullopt},
      {std::string("A"), std::nullopt},
      {std::nullopt, std::string("b")},
      {std::string("A"), std::string("b")},
  };
  std::vector<int> range{1, 2};
  GeneralSpace restricted = GeneralSpace::create(allocs, &range);
  GridDomain unit = GridDomain::make(Ratio(1), Ratio(1));
  MeasuredAlpha half = measured_alpha(restricted, unit);
  REQUIRE(half.value == Ratio(1, 2), "range-restricted alpha must be exactly 1/2");
  REQUIRE(half.profiles == 4 && half.skipped == 1, "alpha profile accounting is off");

  std::cout << "[PASS] 6. allocator oracles: exhaustive agreement, greedy >= 1/2, alpha exact\n";
}

// ---------------------------------------------------------------------------
// Criterion 7: invariants and byte-identical determinism on every config.

const char* kAllConfigs[] = {
    "m1_kunit.json",          "m1_digital_designated.json", "m2_general.json",
    "m3_singleton.json",      "m3_pair.json",               "m3_pair_fine.json",
    "vickrey.json",           "first_price_digital.json",   "always_allocate_digital.json",
    "m1_kunit_no_rebate.json"};

std::string render_all(const HarnessConfig& hc, int jobs) {
  SweepOptions opts;
  opts.jobs = jobs;
  const MechanismConfig& cfg = hc.mechanism;
  std::string out;
  for (Check check : hc.checks) {
    switch (check) {
      case Check::kNom:
        if (uses_general_space(cfg)) {
          out += render_general_witness_csv(cfg.grid, *cfg.space,
                                            check_nom_general(cfg, opts).witnesses);
        } else {
          out += render_witness_csv(cfg.grid, check_nom(cfg, opts).witnesses);
        }
        break;
      case Check::kStructure: {
        StructureReport report = is_willy_wonka(cfg, opts);
        out += uses_general_space(cfg)
                   ? render_general_structure_csv(cfg.grid, *cfg.space, report.general_rows)
                   : render_structure_csv(cfg.grid, report.rows);
        break;
      }
      case Check::kRatio:
        out += render_ratio_csv(cfg.grid, competitive_ratio(cfg, opts));
        break;
      case Check::kFrugality:
        out += render_frugality_csv(cfg.grid, fr2(cfg, opts));
        break;
      case Check::kIr:
        out += render_ir_csv(check_ir_and_transfers(cfg, opts));
        break;
    }
  }
  return out;
}

void criterion_7() {
  for (const char* name : kAllConfigs) {
    HarnessConfig hc = load(name);
    const GridDomain& grid = hc.mechanism.grid;

    // Tick exactness: every grid point survives a money round trip.
    for (Tick t = 0; t <= grid.max_tick; ++t) {
      REQUIRE(grid.to_tick(parse_money(grid.money_string(t))) == t,
              name << ": tick " << t << " does not round-trip");
    }

    // IR, no positive transfers, losers pay zero: the sweep checks all three.
    IrReport ir = check_ir_and_transfers(hc.mechanism);
    REQUIRE(ir.pass(), name << ": " << ir.violations.size() << " IR/transfer violations");

    std::string first = render_all(hc, 1);
    std::string second = render_all(hc, 1);
    REQUIRE(first == second, name << ": reports differ across identical runs");
    std::string parallel = render_all(hc, 2);
    REQUIRE(first == parallel, name << ": reports differ with jobs=2");
    REQUIRE(!first.empty(), name << ": empty report suite");
  }
  std::cout << "[PASS] 7. invariants: IR, transfers, tick exactness, and byte-identical "
               "reports on all "
            << sizeof(kAllConfigs) / sizeof(kAllConfigs[0]) << " configs\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <configs-dir>\n";
    return 2;
  }
  g_config_dir = argv[1];
  try {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
  } catch (const std::exception& e) {
    std::cerr << "[FAIL] unexpected exception: " << e.what() << "\n";
    return 1;
  }
  std::cout << "acceptance: all criteria satisfied\n";
  return 0;
}
