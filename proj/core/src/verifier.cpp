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

#include "wonka/verifier.hpp"

#include <algorithm>
#include <string>

#include "wonka/parallel.hpp"
#include "wonka/report.hpp"

namespace wonka {
namespace {

void require_binary(const MechanismConfig& cfg, const char* what) {
  if (uses_general_space(cfg)) {
    throw Error(std::string(what) + " takes binary-setting rules; use the _general variant");
  }
}

void require_general(const MechanismConfig& cfg, const char* what) {
  if (!uses_general_space(cfg)) {
    throw Error(std::string(what) + " applies only to the wonka_general rule");
  }
}

[[noreturn]] void throw_budget(const char* what, std::uint64_t need, std::uint64_t budget) {
  throw BudgetError(std::string(what) + " needs at least " + std::to_string(need) +
                    " mechanism evaluations, over the budget of " + std::to_string(budget));
}

// One observable consequence for the sweeping agent: whether she wins and
// what she pays. Utilities at any type are a function of this pair alone, so
// opponent sweeps collapse to a handful of points; `profile` is the first
// profile (sweep order) that produced the point.
struct BinaryPoint {
  bool win = false;
  Tick payment = 0;
  BidProfile profile;
};

struct GeneralPoint {
  int assignment = 0;  // agent's own personal-allocation index
  Tick payment = 0;
  MultiBid profile;
};

Tick point_utility(Setting setting, bool win, Tick payment, Tick true_type) {
  if (setting == Setting::kGoods) return win ? true_type - payment : -payment;
  return win ? payment - true_type : payment;
}

void add_point(std::vector<BinaryPoint>& points, bool win, Tick payment, const BidProfile& prof) {
  for (const auto& p : points) {
    if (p.win == win && p.payment == payment) return;
  }
  points.push_back(BinaryPoint{win, payment, prof});
}

void add_point(std::vector<GeneralPoint>& points, int assignment, Tick payment,
               const MultiBid& prof) {
  for (const auto& p : points) {
    if (p.assignment == assignment && p.payment == payment) return;
  }
  points.push_back(GeneralPoint{assignment, payment, prof});
}

// Earliest-in-sweep-order extremes over a point set.
struct Extremes {
  Tick best = 0;
  Tick worst = 0;
  const BidProfile* best_profile = nullptr;
  const BidProfile* worst_profile = nullptr;
};

Extremes extremes_at_type(Setting setting, const std::vector<BinaryPoint>& points,
                          Tick true_type) {
  Extremes out;
  bool first = true;
  for (const auto& p : points) {
    Tick u = point_utility(setting, p.win, p.payment, true_type);
    if (first || u > out.best) {
      out.best = u;
      out.best_profile = &p.profile;
    }
    if (first || u < out.worst) {
      out.worst = u;
      out.worst_profile = &p.profile;
    }
    first = false;
  }
  return out;
}

struct GeneralExtremes {
  Tick best = 0;
  Tick worst = 0;
  const MultiBid* best_profile = nullptr;
  const MultiBid* worst_profile = nullptr;
};

GeneralExtremes extremes_at_type(const std::vector<GeneralPoint>& points,
                                 const std::vector<Tick>& true_type) {
  GeneralExtremes out;
  bool first = true;
  for (const auto& p : points) {
    Tick u = true_type[static_cast<std::size_t>(p.assignment)] - p.payment;
    if (first || u > out.best) {
      out.best = u;
      out.best_profile = &p.profile;
    }
    if (first || u < out.worst) {
      out.worst = u;
      out.worst_profile = &p.profile;
    }
    first = false;
  }
  return out;
}

void fill_profile(int agent, Tick own_bid, const BidProfile& opponents, BidProfile& out) {
  int n = static_cast<int>(opponents.size()) + 1;
  out.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (j == agent) {
      out[static_cast<std::size_t>(j)] = own_bid;
    } else {
      out[static_cast<std::size_t>(j)] = opponents[static_cast<std::size_t>(j < agent ? j : j - 1)];
    }
  }
}

// Sweeps all opponent profiles for one (agent, report), collecting the
// deduplicated outcome points in sweep order.
std::vector<BinaryPoint> sweep_points(const MechanismConfig& cfg, int agent, Tick report) {
  int n = agent_count(cfg);
  Tick base = cfg.grid.n_ticks();
  std::uint64_t opp_total = checked_pow(static_cast<std::uint64_t>(base), n - 1, kSweepBudget);
  std::vector<BinaryPoint> points;
  BidProfile opponents;
  BidProfile bids;
  for (std::uint64_t oi = 0; oi < opp_total; ++oi) {
    decode_profile(oi, n - 1, base, opponents);
    fill_profile(agent, report, opponents, bids);
    Outcome outcome = run_mechanism(cfg, bids);
    add_point(points, wins(outcome.winners, agent), outcome.payments[static_cast<std::size_t>(agent)],
              bids);
  }
  return points;
}

std::vector<std::uint64_t> general_bid_counts(const MechanismConfig& cfg, std::uint64_t budget) {
  const GeneralSpace& space = *cfg.space;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(space.n));
  for (int i = 0; i < space.n; ++i) {
    counts[static_cast<std::size_t>(i)] =
        agent_bid_count(space, i, cfg.grid.n_ticks(), budget);
  }
  return counts;
}

std::vector<GeneralPoint> sweep_points_general(const MechanismConfig& cfg, int agent,
                                               const std::vector<Tick>& report,
                                               const std::vector<std::uint64_t>& counts) {
  const GeneralSpace& space = *cfg.space;
  std::uint64_t opp_total = 1;
  for (int j = 0; j < space.n; ++j) {
    if (j != agent) opp_total *= counts[static_cast<std::size_t>(j)];
  }
  std::vector<GeneralPoint> points;
  MultiBid mb(static_cast<std::size_t>(space.n));
  mb[static_cast<std::size_t>(agent)] = report;
  for (std::uint64_t oi = 0; oi < opp_total; ++oi) {
    std::uint64_t rest = oi;
    for (int j = 0; j < space.n; ++j) {
      if (j == agent) continue;
      std::uint64_t c = counts[static_cast<std::size_t>(j)];
      decode_agent_bid(space, j, rest % c, cfg.grid.n_ticks(), mb[static_cast<std::size_t>(j)]);
      rest /= c;
    }
    GeneralOutcome outcome = wonka_general(cfg, mb);
    add_point(points, outcome.assignment[static_cast<std::size_t>(agent)],
              outcome.payments[static_cast<std::size_t>(agent)], mb);
  }
  return points;
}

}  // namespace

NomReport check_nom(const MechanismConfig& cfg, const SweepOptions& opts) {
  require_binary(cfg, "check_nom");
  int n = agent_count(cfg);
  Tick base = cfg.grid.n_ticks();
  std::uint64_t profiles = checked_pow(static_cast<std::uint64_t>(base), n, opts.budget);
  if (profiles > opts.budget || static_cast<std::uint64_t>(n) > opts.budget / profiles) {
    throw_budget("nom sweep", profiles > opts.budget ? opts.budget + 1
                                                     : static_cast<std::uint64_t>(n) * profiles,
                 opts.budget);
  }
  std::uint64_t tasks = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(base);
  std::vector<std::vector<BinaryPoint>> slots(tasks);
  parallel_for_chunks(tasks, opts.jobs, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t task = begin; task < end; ++task) {
      int agent = static_cast<int>(task / static_cast<std::uint64_t>(base));
      Tick report = static_cast<Tick>(task % static_cast<std::uint64_t>(base));
      slots[task] = sweep_points(cfg, agent, report);
    }
  });
  NomReport report;
  report.evaluations = static_cast<std::uint64_t>(n) * profiles;
  for (int agent = 0; agent < n; ++agent) {
    for (Tick t = 0; t < base; ++t) {
      const auto& truth = slots[static_cast<std::size_t>(agent) * base + t];
      Extremes te = extremes_at_type(cfg.setting, truth, t);
      for (Tick r = 0; r < base; ++r) {
        if (r == t) continue;
        const auto& dishonest = slots[static_cast<std::size_t>(agent) * base + r];
        Extremes de = extremes_at_type(cfg.setting, dishonest, t);
        if (de.best > te.best) {
          ++report.violation_count;
          if (report.witnesses.size() < opts.witness_cap) {
            report.witnesses.push_back(ManipulationWitness{WitnessKind::kBnom, agent, t, r,
                                                           te.best, de.best, *te.best_profile,
                                                           *de.best_profile});
          }
        }
        if (de.worst > te.worst) {
          ++report.violation_count;
          if (report.witnesses.size() < opts.witness_cap) {
            report.witnesses.push_back(ManipulationWitness{WitnessKind::kWnom, agent, t, r,
                                                           te.worst, de.worst, *te.worst_profile,
                                                           *de.worst_profile});
          }
        }
      }
    }
  }
  return report;
}

GeneralNomReport check_nom_general(const MechanismConfig& cfg, const SweepOptions& opts) {
  require_general(cfg, "check_nom_general");
  const GeneralSpace& space = *cfg.space;
  std::vector<std::uint64_t> counts = general_bid_counts(cfg, opts.budget);
  std::uint64_t profiles = 1;
  for (std::uint64_t c : counts) {
    if (c > opts.budget || profiles > opts.budget / c) {
      throw_budget("general nom sweep", opts.budget + 1, opts.budget);
    }
    profiles *= c;
  }
  if (static_cast<std::uint64_t>(space.n) > opts.budget / profiles) {
    throw_budget("general nom sweep", static_cast<std::uint64_t>(space.n) * profiles,
                 opts.budget);
  }
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(space.n) + 1, 0);
  for (int i = 0; i < space.n; ++i) {
    offsets[static_cast<std::size_t>(i) + 1] =
        offsets[static_cast<std::size_t>(i)] + counts[static_cast<std::size_t>(i)];
  }
  std::uint64_t tasks = offsets.back();
  std::vector<std::vector<GeneralPoint>> slots(tasks);
  parallel_for_chunks(tasks, opts.jobs, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
    std::vector<Tick> bid;
    for (std::uint64_t task = begin; task < end; ++task) {
      int agent = static_cast<int>(
          std::upper_bound(offsets.begin(), offsets.end(), task) - offsets.begin() - 1);
      std::uint64_t index = task - offsets[static_cast<std::size_t>(agent)];
      decode_agent_bid(space, agent, index, cfg.grid.n_ticks(), bid);
      slots[task] = sweep_points_general(cfg, agent, bid, counts);
    }
  });
  GeneralNomReport report;
  report.evaluations = static_cast<std::uint64_t>(space.n) * profiles;
  std::vector<Tick> true_type;
  std::vector<Tick> misreport;
  for (int agent = 0; agent < space.n; ++agent) {
    std::uint64_t count = counts[static_cast<std::size_t>(agent)];
    for (std::uint64_t ti = 0; ti < count; ++ti) {
      decode_agent_bid(space, agent, ti, cfg.grid.n_ticks(), true_type);
      const auto& truth = slots[offsets[static_cast<std::size_t>(agent)] + ti];
      GeneralExtremes te = extremes_at_type(truth, true_type);
      for (std::uint64_t ri = 0; ri < count; ++ri) {
        if (ri == ti) continue;
        const auto& dishonest = slots[offsets[static_cast<std::size_t>(agent)] + ri];
        GeneralExtremes de = extremes_at_type(dishonest, true_type);
        if (de.best > te.best || de.worst > te.worst) {
          decode_agent_bid(space, agent, ri, cfg.grid.n_ticks(), misreport);
        }
        if (de.best > te.best) {
          ++report.violation_count;
          if (report.witnesses.size() < opts.witness_cap) {
            report.witnesses.push_back(GeneralManipulationWitness{
                WitnessKind::kBnom, agent, true_type, misreport, te.best, de.best,
                *te.best_profile, *de.best_profile});
          }
        }
        if (de.worst > te.worst) {
          ++report.violation_count;
          if (report.witnesses.size() < opts.witness_cap) {
            report.witnesses.push_back(GeneralManipulationWitness{
                WitnessKind::kWnom, agent, true_type, misreport, te.worst, de.worst,
                *te.worst_profile, *de.worst_profile});
          }
        }
      }
    }
  }
  return report;
}

Tick best_case_utility(const MechanismConfig& cfg, int agent, Tick true_type, Tick report) {
  require_binary(cfg, "best_case_utility");
  auto points = sweep_points(cfg, agent, report);
  return extremes_at_type(cfg.setting, points, true_type).best;
}

Tick worst_case_utility(const MechanismConfig& cfg, int agent, Tick true_type, Tick report) {
  require_binary(cfg, "worst_case_utility");
  auto points = sweep_points(cfg, agent, report);
  return extremes_at_type(cfg.setting, points, true_type).worst;
}

Tick best_case_utility_general(const MechanismConfig& cfg, int agent,
                               const std::vector<Tick>& true_type,
                               const std::vector<Tick>& report) {
  require_general(cfg, "best_case_utility_general");
  auto counts = general_bid_counts(cfg, kSweepBudget);
  auto points = sweep_points_general(cfg, agent, report, counts);
  return extremes_at_type(points, true_type).best;
}

Tick worst_case_utility_general(const MechanismConfig& cfg, int agent,
                                const std::vector<Tick>& true_type,
                                const std::vector<Tick>& report) {
  require_general(cfg, "worst_case_utility_general");
  auto counts = general_bid_counts(cfg, kSweepBudget);
  auto points = sweep_points_general(cfg, agent, report, counts);
  return extremes_at_type(points, true_type).worst;
}

std::optional<BidProfile> golden_ticket_exists(const MechanismConfig& cfg, int agent, Tick bid) {
  require_binary(cfg, "golden_ticket_exists");
  int n = agent_count(cfg);
  Tick base = cfg.grid.n_ticks();
  std::uint64_t opp_total = checked_pow(static_cast<std::uint64_t>(base), n - 1, kSweepBudget);
  if (opp_total > kSweepBudget) throw_budget("golden-ticket sweep", opp_total, kSweepBudget);
  BidProfile opponents;
  BidProfile bids;
  for (std::uint64_t oi = 0; oi < opp_total; ++oi) {
    decode_profile(oi, n - 1, base, opponents);
    fill_profile(agent, bid, opponents, bids);
    Outcome outcome = run_mechanism(cfg, bids);
    bool won = wins(outcome.winners, agent);
    Tick p = outcome.payments[static_cast<std::size_t>(agent)];
    bool golden = cfg.setting == Setting::kGoods ? (won && p == 0)
                                                 : (won && p == cfg.grid.max_tick);
    if (golden) return bids;
  }
  return std::nullopt;
}

std::optional<BidProfile> wooden_spoon_exists(const MechanismConfig& cfg, int agent, Tick bid) {
  require_binary(cfg, "wooden_spoon_exists");
  int n = agent_count(cfg);
  Tick base = cfg.grid.n_ticks();
  std::uint64_t opp_total = checked_pow(static_cast<std::uint64_t>(base), n - 1, kSweepBudget);
  if (opp_total > kSweepBudget) throw_budget("wooden-spoon sweep", opp_total, kSweepBudget);
  BidProfile opponents;
  BidProfile bids;
  for (std::uint64_t oi = 0; oi < opp_total; ++oi) {
    decode_profile(oi, n - 1, base, opponents);
    fill_profile(agent, bid, opponents, bids);
    Outcome outcome = run_mechanism(cfg, bids);
    if (!wins(outcome.winners, agent)) return bids;
  }
  return std::nullopt;
}

std::optional<MultiBid> golden_ticket_exists_general(const MechanismConfig& cfg, int agent,
                                                     const std::vector<Tick>& bid) {
  require_general(cfg, "golden_ticket_exists_general");
  const GeneralSpace& space = *cfg.space;
  Tick range_max = 0;
  for (int idx : space.range) {
    range_max = std::max(range_max,
                         bid[static_cast<std::size_t>(space.allocations[idx][agent])]);
  }
  auto counts = general_bid_counts(cfg, kSweepBudget);
  auto points = sweep_points_general(cfg, agent, bid, counts);
  for (const auto& p : points) {
    if (p.payment == 0 && bid[static_cast<std::size_t>(p.assignment)] == range_max) {
      return p.profile;
    }
  }
  return std::nullopt;
}

std::optional<MultiBid> wooden_spoon_exists_general(const MechanismConfig& cfg, int agent,
                                                    const std::vector<Tick>& bid) {
  require_general(cfg, "wooden_spoon_exists_general");
  auto counts = general_bid_counts(cfg, kSweepBudget);
  auto points = sweep_points_general(cfg, agent, bid, counts);
  for (const auto& p : points) {
    if (p.assignment == 0) return p.profile;
  }
  return std::nullopt;
}

bool witness_sound(const MechanismConfig& cfg, const ManipulationWitness& witness) {
  std::size_t agent = static_cast<std::size_t>(witness.agent);
  if (agent >= witness.truthful_profile.size() ||
      witness.truthful_profile[agent] != witness.true_type ||
      witness.dishonest_profile[agent] != witness.misreport) {
    return false;
  }
  Outcome truthful = run_mechanism(cfg, witness.truthful_profile);
  Outcome dishonest = run_mechanism(cfg, witness.dishonest_profile);
  return utility(truthful, witness.agent, witness.true_type) == witness.truthful_extreme &&
         utility(dishonest, witness.agent, witness.true_type) == witness.dishonest_extreme &&
         witness.dishonest_extreme > witness.truthful_extreme;
}

bool witness_sound(const MechanismConfig& cfg, const GeneralManipulationWitness& witness) {
  std::size_t agent = static_cast<std::size_t>(witness.agent);
  if (agent >= witness.truthful_profile.size() ||
      witness.truthful_profile[agent] != witness.true_type ||
      witness.dishonest_profile[agent] != witness.misreport) {
    return false;
  }
  GeneralOutcome truthful = run_mechanism_general(cfg, witness.truthful_profile);
  GeneralOutcome dishonest = run_mechanism_general(cfg, witness.dishonest_profile);
  const GeneralSpace& space = *cfg.space;
  return utility(space, truthful, witness.agent, witness.true_type) == witness.truthful_extreme &&
         utility(space, dishonest, witness.agent, witness.true_type) ==
             witness.dishonest_extreme &&
         witness.dishonest_extreme > witness.truthful_extreme;
}

std::vector<IrViolation> outcome_violations(const GridDomain& grid, const BidProfile& bids,
                                            const Outcome& outcome) {
  std::vector<IrViolation> out;
  std::string profile = profile_string(grid, bids);
  for (std::size_t i = 0; i < bids.size(); ++i) {
    int agent = static_cast<int>(i);
    if (utility(outcome, agent, bids[i]) < 0) {
      out.push_back(IrViolation{profile, agent, "negative_utility"});
    }
    if (outcome.setting == Setting::kGoods && !wins(outcome.winners, agent) &&
        outcome.payments[i] != 0) {
      out.push_back(IrViolation{profile, agent, "loser_pays"});
    }
    if (outcome.payments[i] < 0) {
      out.push_back(IrViolation{profile, agent, "negative_payment"});
    }
  }
  return out;
}

std::vector<IrViolation> outcome_violations_general(const GridDomain& grid,
                                                    const GeneralSpace& space, const MultiBid& mb,
                                                    const GeneralOutcome& outcome) {
  std::vector<IrViolation> out;
  std::string profile = multibid_string(grid, space, mb);
  for (int agent = 0; agent < space.n; ++agent) {
    std::size_t i = static_cast<std::size_t>(agent);
    if (utility(space, outcome, agent, mb[i]) < 0) {
      out.push_back(IrViolation{profile, agent, "negative_utility"});
    }
    if (outcome.assignment[i] == 0 && outcome.payments[i] != 0) {
      out.push_back(IrViolation{profile, agent, "loser_pays"});
    }
    if (outcome.payments[i] < 0) {
      out.push_back(IrViolation{profile, agent, "negative_payment"});
    }
  }
  return out;
}

IrReport check_ir_and_transfers(const MechanismConfig& cfg, const SweepOptions& opts) {
  IrReport report;
  if (uses_general_space(cfg)) {
    const GeneralSpace& space = *cfg.space;
    std::vector<std::uint64_t> counts = general_bid_counts(cfg, opts.budget);
    std::uint64_t profiles = 1;
    for (std::uint64_t c : counts) {
      if (c > opts.budget || profiles > opts.budget / c) {
        throw_budget("ir sweep", opts.budget + 1, opts.budget);
      }
      profiles *= c;
    }
    report.evaluations = profiles;
    std::vector<std::vector<IrViolation>> slots;
    int chunk_count = std::max(1, opts.jobs);
    slots.resize(static_cast<std::size_t>(chunk_count));
    parallel_for_chunks(profiles, opts.jobs,
                        [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
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
                            auto bad = outcome_violations_general(cfg.grid, space, mb, outcome);
                            auto& sink = slots[static_cast<std::size_t>(
                                std::min<std::uint64_t>(chunk, slots.size() - 1))];
                            sink.insert(sink.end(), bad.begin(), bad.end());
                          }
                        });
    for (const auto& s : slots) {
      report.violations.insert(report.violations.end(), s.begin(), s.end());
    }
    return report;
  }
  int n = agent_count(cfg);
  Tick base = cfg.grid.n_ticks();
  std::uint64_t profiles = checked_pow(static_cast<std::uint64_t>(base), n, opts.budget);
  if (profiles > opts.budget) throw_budget("ir sweep", profiles, opts.budget);
  report.evaluations = profiles;
  int chunk_count = std::max(1, opts.jobs);
  std::vector<std::vector<IrViolation>> slots(static_cast<std::size_t>(chunk_count));
  parallel_for_chunks(profiles, opts.jobs,
                      [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
                        BidProfile bids;
                        for (std::uint64_t pi = begin; pi < end; ++pi) {
                          decode_profile(pi, n, base, bids);
                          Outcome outcome = run_mechanism(cfg, bids);
                          auto bad = outcome_violations(cfg.grid, bids, outcome);
                          auto& sink = slots[static_cast<std::size_t>(
                              std::min<std::uint64_t>(chunk, slots.size() - 1))];
                          sink.insert(sink.end(), bad.begin(), bad.end());
                        }
                      });
  for (const auto& s : slots) {
    report.violations.insert(report.violations.end(), s.begin(), s.end());
  }
  return report;
}

}  // namespace wonka
