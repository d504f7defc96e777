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

#ifndef WONKA_DOMAIN_HPP_
#define WONKA_DOMAIN_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace wonka {

// All bid-domain values live on a finite grid {0, delta, 2*delta, ..., h} and
// are stored as integer ticks (value = tick * delta), so every comparison in
// the library is exact integer arithmetic. Exact rationals appear only at the
// edges: parsing config money, rendering reports, and ratio aggregation.
using Tick = std::int64_t;
using Ratio = boost::rational<long long>;
using WinnerSet = std::uint32_t;
using BidProfile = std::vector<Tick>;

enum class Setting { kGoods, kProcurement };

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected inputs: malformed money, off-grid values, inconsistent specs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Enumeration or sweep size exceeds the configured cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// No feasible allocation satisfies a requested restriction.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kEnumerationBudget = std::size_t{1} << 20;
inline constexpr std::size_t kSweepBudget = std::size_t{1} << 20;
inline constexpr int kMaxAgents = 20;

// Renders a rational as "p" (integral) or "p/q"; never a float.
std::string to_money_string(const Ratio& value);

// Accepts "12", "3/4" and decimal strings such as "0.25". Anything else,
// including floats with exponents, is a ConfigError.
Ratio parse_money(const std::string& text);

// Finite discretization of [0, h]. Grid values are exactly
// {0, delta, ..., h}; max_tick = h / delta.
struct GridDomain {
  Ratio h{1};
  Ratio delta{1};
  Tick max_tick = 1;

  static GridDomain make(const Ratio& h, const Ratio& delta);

  Tick n_ticks() const { return max_tick + 1; }
  Ratio money(Tick tick) const { return delta * static_cast<long long>(tick); }
  std::string money_string(Tick tick) const { return to_money_string(money(tick)); }

  // Maps an exact money value onto the grid; throws ConfigError naming the
  // value when it is off-grid or outside [0, h].
  Tick to_tick(const Ratio& value) const;
};

// Full result of a binary-setting mechanism on one profile. Payments are in
// ticks: goods payments flow from bidders, procurement payments to bidders.
struct Outcome {
  Setting setting = Setting::kGoods;
  WinnerSet winners = 0;
  std::vector<Tick> payments;
  WinnerSet excluded = 0;               // agents removed by a designated wooden spoon
  std::optional<int> rebate_agent;      // goods: winner whose payment was zeroed
  std::optional<int> golden_agent;      // procurement: agent paid h
};

inline bool wins(WinnerSet set, int agent) { return (set >> agent) & 1u; }
inline int winner_count(WinnerSet set) { return std::popcount(set); }

std::vector<int> winner_list(WinnerSet set);

// Sum of winners' bids; throws Error on dimension mismatch.
Tick social_welfare(WinnerSet winners, const BidProfile& bids);

// Same summation with cost semantics.
Tick social_cost(WinnerSet winners, const BidProfile& costs);

// Goods: true_type * wins - payment. Procurement: payment - true_type * wins.
Tick utility(const Outcome& outcome, int agent, Tick true_type);

Tick total_payment(const Outcome& outcome);

}  // namespace wonka

#endif  // WONKA_DOMAIN_HPP_
