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

#include "wonka/structure.hpp"

#include <algorithm>

#include "wonka/parallel.hpp"

namespace wonka {
namespace {

StructureRow classify_binary(const MechanismConfig& cfg, int agent, Tick bid,
                             std::uint64_t& evaluations) {
  StructureRow row;
  row.agent = agent;
  row.bid = bid;
  int n = agent_count(cfg);
  Tick base = cfg.grid.n_ticks();
  std::uint64_t opp_total = checked_pow(static_cast<std::uint64_t>(base), n - 1, kSweepBudget);
  BidProfile opponents;
  BidProfile bids(static_cast<std::size_t>(n));
  for (std::uint64_t oi = 0; oi < opp_total; ++oi) {
    decode_profile(oi, n - 1, base, opponents);
    for (int j = 0; j < n; ++j) {
      bids[static_cast<std::size_t>(j)] =
          j == agent ? bid : opponents[static_cast<std::size_t>(j < agent ? j : j - 1)];
    }
    Outcome outcome = run_mechanism(cfg, bids);
    ++evaluations;
    bool won = wins(outcome.winners, agent);
    Tick p = outcome.payments[static_cast<std::size_t>(agent)];
    bool golden = cfg.setting == Setting::kGoods ? (p == 0 && (won || bid == 0))
                                                 : (won && p == cfg.grid.max_tick);
    if (golden && !row.golden_ticket) {
      row.golden_ticket = true;
      row.golden_profile = bids;
    }
    if (!won && !row.wooden_spoon) {
      row.wooden_spoon = true;
      row.spoon_profile = bids;
    }
    if (utility(outcome, agent, bid) == 0 && !row.zero_margin) {
      row.zero_margin = true;
      row.zero_margin_profile = bids;
    }
    if (row.golden_ticket && row.wooden_spoon && row.zero_margin) break;
  }
  return row;
}

GeneralStructureRow classify_general(const MechanismConfig& cfg, int agent,
                                     const std::vector<Tick>& bid,
                                     const std::vector<std::uint64_t>& counts,
                                     std::uint64_t& evaluations) {
  GeneralStructureRow row;
  row.agent = agent;
  row.bid = bid;
  const GeneralSpace& space = *cfg.space;
  Tick range_max = 0;
  for (int idx : space.range) {
    range_max = std::max(range_max,
                         bid[static_cast<std::size_t>(space.allocations[idx][agent])]);
  }
  std::uint64_t opp_total = 1;
  for (int j = 0; j < space.n; ++j) {
    if (j != agent) opp_total *= counts[static_cast<std::size_t>(j)];
  }
  MultiBid mb(static_cast<std::size_t>(space.n));
  mb[static_cast<std::size_t>(agent)] = bid;
  for (std::uint64_t oi = 0; oi < opp_total; ++oi) {
    std::uint64_t rest = oi;
    for (int j = 0; j < space.n; ++j) {
      if (j == agent) continue;
      std::uint64_t c = counts[static_cast<std::size_t>(j)];
      decode_agent_bid(space, j, rest % c, cfg.grid.n_ticks(), mb[static_cast<std::size_t>(j)]);
      rest /= c;
    }
    GeneralOutcome outcome = wonka_general(cfg, mb);
    ++evaluations;
    int a = outcome.assignment[static_cast<std::size_t>(agent)];
    Tick p = outcome.payments[static_cast<std::size_t>(agent)];
    if (p == 0 && bid[static_cast<std::size_t>(a)] == range_max && !row.golden_ticket) {
      row.golden_ticket = true;
      row.golden_profile = mb;
    }
    if (a == 0 && !row.wooden_spoon) {
      row.wooden_spoon = true;
      row.spoon_profile = mb;
    }
    if (bid[static_cast<std::size_t>(a)] - p == 0 && !row.zero_margin) {
      row.zero_margin = true;
      row.zero_margin_profile = mb;
    }
    if (row.golden_ticket && row.wooden_spoon && row.zero_margin) break;
  }
  return row;
}

}  // namespace

StructureReport is_willy_wonka(const MechanismConfig& cfg, const SweepOptions& opts) {
  StructureReport report;
  if (uses_general_space(cfg)) {
    const GeneralSpace& space = *cfg.space;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(space.n));
    std::uint64_t profiles = 1;
    for (int i = 0; i < space.n; ++i) {
      counts[static_cast<std::size_t>(i)] =
          agent_bid_count(space, i, cfg.grid.n_ticks(), opts.budget);
      std::uint64_t c = counts[static_cast<std::size_t>(i)];
      if (c > opts.budget || profiles > opts.budget / c) {
        throw BudgetError("structure sweep exceeds the evaluation budget of " +
                          std::to_string(opts.budget));
      }
      profiles *= c;
    }
    if (static_cast<std::uint64_t>(space.n) > opts.budget / profiles) {
      throw BudgetError("structure sweep needs " +
                        std::to_string(static_cast<std::uint64_t>(space.n) * profiles) +
                        " evaluations, over the budget of " + std::to_string(opts.budget));
    }
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(space.n) + 1, 0);
    for (int i = 0; i < space.n; ++i) {
      offsets[static_cast<std::size_t>(i) + 1] =
          offsets[static_cast<std::size_t>(i)] + counts[static_cast<std::size_t>(i)];
    }
    std::uint64_t tasks = offsets.back();
    report.general_rows.resize(tasks);
    std::vector<std::uint64_t> task_evals(tasks, 0);
    parallel_for_chunks(
        tasks, opts.jobs, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
          std::vector<Tick> bid;
          for (std::uint64_t task = begin; task < end; ++task) {
            int agent = static_cast<int>(
                std::upper_bound(offsets.begin(), offsets.end(), task) - offsets.begin() - 1);
            decode_agent_bid(space, agent, task - offsets[static_cast<std::size_t>(agent)],
                             cfg.grid.n_ticks(), bid);
            report.general_rows[task] = classify_general(cfg, agent, bid, counts,
                                                         task_evals[task]);
          }
        });
    for (std::uint64_t e : task_evals) report.evaluations += e;
    report.willy_wonka = std::all_of(
        report.general_rows.begin(), report.general_rows.end(), [](const GeneralStructureRow& r) {
          return r.golden_ticket && (r.wooden_spoon || r.zero_margin);
        });
    return report;
  }
  int n = agent_count(cfg);
  Tick base = cfg.grid.n_ticks();
  std::uint64_t profiles = checked_pow(static_cast<std::uint64_t>(base), n, opts.budget);
  if (profiles > opts.budget || static_cast<std::uint64_t>(n) > opts.budget / profiles) {
    throw BudgetError("structure sweep needs at least " +
                      std::to_string(profiles > opts.budget
                                         ? opts.budget + 1
                                         : static_cast<std::uint64_t>(n) * profiles) +
                      " evaluations, over the budget of " + std::to_string(opts.budget));
  }
  std::uint64_t tasks = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(base);
  report.rows.resize(tasks);
  std::vector<std::uint64_t> task_evals(tasks, 0);
  parallel_for_chunks(tasks, opts.jobs,
                      [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                        for (std::uint64_t task = begin; task < end; ++task) {
                          int agent = static_cast<int>(task / static_cast<std::uint64_t>(base));
                          Tick bid = static_cast<Tick>(task % static_cast<std::uint64_t>(base));
                          report.rows[task] = classify_binary(cfg, agent, bid, task_evals[task]);
                        }
                      });
  for (std::uint64_t e : task_evals) report.evaluations += e;
  report.willy_wonka =
      std::all_of(report.rows.begin(), report.rows.end(), [](const StructureRow& r) {
        return r.golden_ticket && (r.wooden_spoon || r.zero_margin);
      });
  return report;
}

}  // namespace wonka
