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

#include "wonka/general_space.hpp"

#include <algorithm>
#include <set>

namespace wonka {

GeneralSpace GeneralSpace::create(
    const std::vector<std::vector<std::optional<std::string>>>& allocs,
    const std::vector<int>* range) {
  if (allocs.empty()) {
    throw ConfigError("general space needs at least one allocation");
  }
  int n = static_cast<int>(allocs.front().size());
  if (n < 1 || n > kMaxAgents) {
    throw ConfigError("general space agent count must be in [1, " + std::to_string(kMaxAgents) +
                      "]");
  }
  GeneralSpace space;
  space.n = n;
  std::vector<std::set<std::string>> seen(n);
  for (const auto& row : allocs) {
    if (static_cast<int>(row.size()) != n) {
      throw ConfigError("all allocations must assign the same number of agents");
    }
    for (int i = 0; i < n; ++i) {
      if (row[i].has_value()) {
        if (row[i]->empty()) {
          throw ConfigError("personal allocation identifiers must be nonempty strings");
        }
        seen[i].insert(*row[i]);
      }
    }
  }
  space.ids.resize(n);
  for (int i = 0; i < n; ++i) {
    space.ids[i].push_back("");
    space.ids[i].insert(space.ids[i].end(), seen[i].begin(), seen[i].end());
  }
  for (const auto& row : allocs) {
    std::vector<int> assignment(n, 0);
    for (int i = 0; i < n; ++i) {
      if (row[i].has_value()) {
        const auto& list = space.ids[i];
        assignment[i] = static_cast<int>(
            std::find(list.begin(), list.end(), *row[i]) - list.begin());
      }
    }
    space.allocations.push_back(std::move(assignment));
  }
  for (int i = 0; i < n; ++i) {
    bool has_empty = false;
    for (const auto& a : space.allocations) {
      if (a[i] == 0) {
        has_empty = true;
        break;
      }
    }
    if (!has_empty) {
      throw ConfigError("agent " + std::to_string(i) +
                        " has no allocation assigning her the empty allocation");
    }
  }
  if (range != nullptr) {
    if (range->empty()) {
      throw ConfigError("allocation range must be nonempty");
    }
    std::vector<int> r = *range;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    for (int idx : r) {
      if (idx < 0 || idx >= static_cast<int>(space.allocations.size())) {
        throw ConfigError("allocation range index " + std::to_string(idx) + " is out of bounds");
      }
    }
    space.range = std::move(r);
  } else {
    space.range.resize(space.allocations.size());
    for (std::size_t i = 0; i < space.allocations.size(); ++i) {
      space.range[i] = static_cast<int>(i);
    }
  }
  return space;
}

const std::vector<std::string>& GeneralSpace::personal_allocations(int agent) const {
  if (agent < 0 || agent >= n) {
    throw Error("agent index out of range");
  }
  return ids[agent];
}

bool GeneralSpace::can_lose(int agent) const {
  for (const auto& a : allocations) {
    if (a[agent] == 0) return true;
  }
  return false;
}

void validate_multibid(const GeneralSpace& space, const MultiBid& mb, Tick max_tick) {
  if (static_cast<int>(mb.size()) != space.n) {
    throw Error("multi-bid does not cover every agent");
  }
  for (int i = 0; i < space.n; ++i) {
    if (mb[i].size() != space.ids[i].size()) {
      throw Error("multi-bid for agent " + std::to_string(i) +
                  " does not match her personal allocation set");
    }
    if (mb[i][0] != 0) {
      throw Error("the empty allocation must be valued 0");
    }
    for (Tick t : mb[i]) {
      if (t < 0 || t > max_tick) {
        throw Error("multi-bid value out of grid range");
      }
    }
  }
}

Tick social_welfare(const GeneralSpace& space, const MultiBid& mb, int allocation_index) {
  if (allocation_index < 0 ||
      allocation_index >= static_cast<int>(space.allocations.size())) {
    throw Error("allocation index out of range");
  }
  const auto& assignment = space.allocations[allocation_index];
  Tick sum = 0;
  for (int i = 0; i < space.n; ++i) {
    sum += mb[i][assignment[i]];
  }
  return sum;
}

WinnerSet general_winners(const GeneralOutcome& outcome) {
  WinnerSet set = 0;
  for (std::size_t i = 0; i < outcome.assignment.size(); ++i) {
    if (outcome.assignment[i] != 0) set |= WinnerSet{1} << i;
  }
  return set;
}

Tick utility(const GeneralSpace& space, const GeneralOutcome& outcome, int agent,
             const std::vector<Tick>& true_values) {
  if (agent < 0 || agent >= space.n) {
    throw Error("agent index out of range");
  }
  if (true_values.size() != space.ids[agent].size()) {
    throw Error("true values do not match the personal allocation set");
  }
  return true_values[outcome.assignment[agent]] - outcome.payments[agent];
}

std::uint64_t agent_bid_count(const GeneralSpace& space, int agent, Tick n_ticks,
                              std::uint64_t cap) {
  std::uint64_t out = 1;
  std::uint64_t base = static_cast<std::uint64_t>(n_ticks);
  for (int c = 1; c < space.coords(agent); ++c) {
    if (out > cap / base) return cap + 1;
    out *= base;
    if (out > cap) return cap + 1;
  }
  return out;
}

void decode_agent_bid(const GeneralSpace& space, int agent, std::uint64_t index, Tick n_ticks,
                      std::vector<Tick>& out) {
  out.assign(space.ids[agent].size(), 0);
  std::uint64_t base = static_cast<std::uint64_t>(n_ticks);
  for (int c = 1; c < space.coords(agent); ++c) {
    out[c] = static_cast<Tick>(index % base);
    index /= base;
  }
}

}  // namespace wonka
