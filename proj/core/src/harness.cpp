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

#include "wonka/harness.hpp"

#include <algorithm>
#include <string>

#include "wonka/parallel.hpp"
#include "wonka/report.hpp"

namespace wonka {
namespace {

[[noreturn]] void throw_budget(const char* what, std::uint64_t need, std::uint64_t budget) {
  throw BudgetError(std::string(what) + " needs at least " + std::to_string(need) +
                    " mechanism evaluations, over the budget of " + std::to_string(budget));
}

Ratio tau_bound(const Ratio& alpha, int tau) {
  return alpha * (Ratio(tau - 1) / Ratio(tau));
}

}  // namespace

Tick optimal_revenue_benchmark(const Family& family, const BidProfile& bids) {
  Tick best = 0;
  for (WinnerSet s : family.sets()) best = std::max(best, social_welfare(s, bids));
  return best;
}

Tick optimal_welfare_general(const GeneralSpace& space, const MultiBid& mb) {
  Tick best = 0;
  for (std::size_t idx = 0; idx < space.allocations.size(); ++idx) {
    best = std::max(best, social_welfare(space, mb, static_cast<int>(idx)));
  }
  return best;
}

RatioReport competitive_ratio(const MechanismConfig& cfg, const SweepOptions& opts) {
  if (cfg.setting != Setting::kGoods) {
    throw ConfigError("the ratio check applies to goods mode; use frugality for procurement");
  }
  RatioReport report;
  if (uses_general_space(cfg)) {
    const GeneralSpace& space = *cfg.space;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(space.n));
    std::uint64_t profiles = 1;
    for (int i = 0; i < space.n; ++i) {
      std::uint64_t c = agent_bid_count(space, i, cfg.grid.n_ticks(), opts.budget);
      counts[static_cast<std::size_t>(i)] = c;
      if (c > opts.budget || profiles > opts.budget / c) {
        throw_budget("ratio sweep", opts.budget + 1, opts.budget);
      }
      profiles *= c;
    }
    report.evaluations = profiles;
    MeasuredAlpha alpha = measured_alpha(space, cfg.grid, opts.budget);
    report.alpha = alpha.value;
    report.alpha_degenerate = alpha.degenerate;
    report.tau = tau_range(space);
    report.rows.resize(profiles);
    parallel_for_chunks(
        profiles, opts.jobs, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
          MultiBid mb(static_cast<std::size_t>(space.n));
          for (std::uint64_t pi = begin; pi < end; ++pi) {
            std::uint64_t rest = pi;
            for (int j = 0; j < space.n; ++j) {
              std::uint64_t c = counts[static_cast<std::size_t>(j)];
              decode_agent_bid(space, j, rest % c, cfg.grid.n_ticks(),
                               mb[static_cast<std::size_t>(j)]);
              rest /= c;
            }
            GeneralOutcome outcome = wonka_general(cfg, mb);
            RatioRow& row = report.rows[pi];
            row.profile = multibid_string(cfg.grid, space, mb);
            for (Tick p : outcome.payments) row.revenue += p;
            row.benchmark = optimal_welfare_general(space, mb);
            row.designated = designated_exclusions_general(cfg, mb) != 0;
            if (row.benchmark > 0) {
              row.ratio = Ratio(row.revenue, row.benchmark);
            } else {
              row.excluded = true;
            }
          }
        });
  } else {
    int n = agent_count(cfg);
    Tick base = cfg.grid.n_ticks();
    std::uint64_t profiles = checked_pow(static_cast<std::uint64_t>(base), n, opts.budget);
    if (profiles > opts.budget) throw_budget("ratio sweep", profiles, opts.budget);
    report.evaluations = profiles;
    report.alpha = claimed_alpha(cfg.allocator.kind);
    report.tau = cfg.family->tau();
    report.rows.resize(profiles);
    parallel_for_chunks(profiles, opts.jobs,
                        [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                          BidProfile bids;
                          for (std::uint64_t pi = begin; pi < end; ++pi) {
                            decode_profile(pi, n, base, bids);
                            Outcome outcome = run_mechanism(cfg, bids);
                            RatioRow& row = report.rows[pi];
                            row.profile = profile_string(cfg.grid, bids);
                            row.revenue = total_payment(outcome);
                            row.benchmark = optimal_revenue_benchmark(*cfg.family, bids);
                            row.designated = designated_exclusions(cfg, bids) != 0;
                            if (row.benchmark > 0) {
                              row.ratio = Ratio(row.revenue, row.benchmark);
                            } else {
                              row.excluded = true;
                            }
                          }
                        });
  }
  for (const RatioRow& row : report.rows) {
    if (row.excluded) {
      ++report.zero_benchmark_rows;
      continue;
    }
    if (!report.aggregate || *row.ratio < *report.aggregate) report.aggregate = row.ratio;
    if (row.designated) continue;
    if (!report.aggregate_excluding_designated ||
        *row.ratio < *report.aggregate_excluding_designated) {
      report.aggregate_excluding_designated = row.ratio;
    }
  }
  for (const RatioRow& row : report.rows) {
    if (row.designated) ++report.designated_rows;
  }
  report.bound = tau_bound(report.alpha, report.tau);
  report.satisfied = !report.aggregate_excluding_designated ||
                     *report.aggregate_excluding_designated >= report.bound;
  return report;
}

SecondBest second_best_cost(const Family& family, const BidProfile& costs) {
  if (family.sets().empty()) throw InfeasibleError("the feasible family is empty");
  Tick optimum = social_cost(family.sets().front(), costs);
  for (WinnerSet s : family.sets()) optimum = std::min(optimum, social_cost(s, costs));
  std::optional<Tick> second;
  for (WinnerSet s : family.sets()) {
    Tick c = social_cost(s, costs);
    if (c > optimum && (!second || c < *second)) second = c;
  }
  if (!second) return SecondBest{optimum, true};
  return SecondBest{*second, false};
}

FrugalityReport fr2(const MechanismConfig& cfg, const SweepOptions& opts) {
  if (cfg.setting != Setting::kProcurement) {
    throw ConfigError("the frugality check applies to procurement mode");
  }
  const Family& family = *cfg.family;
  int n = agent_count(cfg);
  Tick base = cfg.grid.n_ticks();
  std::uint64_t profiles = checked_pow(static_cast<std::uint64_t>(base), n, opts.budget);
  if (profiles > opts.budget) throw_budget("frugality sweep", profiles, opts.budget);
  FrugalityReport report;
  report.evaluations = profiles;
  report.rows.resize(profiles);
  parallel_for_chunks(profiles, opts.jobs,
                      [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                        BidProfile bids;
                        for (std::uint64_t pi = begin; pi < end; ++pi) {
                          decode_profile(pi, n, base, bids);
                          Outcome outcome = run_mechanism(cfg, bids);
                          FrugalityRow& row = report.rows[pi];
                          row.profile = profile_string(cfg.grid, bids);
                          row.profile_ticks = bids;
                          row.total_payment = total_payment(outcome);
                          SecondBest sb = second_best_cost(family, bids);
                          row.second_best = sb.cost;
                          row.degenerate = sb.degenerate;
                          row.golden_agent = outcome.golden_agent;
                          if (!sb.degenerate) {
                            row.ratio = Ratio(row.total_payment, row.second_best);
                          }
                        }
                      });
  for (const FrugalityRow& row : report.rows) {
    if (row.degenerate) {
      ++report.degenerate_rows;
      continue;
    }
    if (!report.aggregate || *row.ratio > *report.aggregate) report.aggregate = row.ratio;
  }
  int max_k = 0;
  for (int i = 0; i < n; ++i) max_k = std::max(max_k, family.max_size_containing(i));
  report.bound = Ratio(max_k > 1 ? 2 : 1);
  report.satisfied = !report.aggregate || *report.aggregate <= report.bound;
  return report;
}

}  // namespace wonka
