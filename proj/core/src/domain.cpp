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

#include "wonka/domain.hpp"

#include <charconv>
#include <cctype>

namespace wonka {
namespace {

long long parse_int_part(const std::string& text, std::size_t begin, std::size_t end,
                         const std::string& whole) {
  if (begin >= end) {
    throw ConfigError("invalid money value '" + whole + "'");
  }
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ConfigError("invalid money value '" + whole + "'");
    }
  }
  long long out = 0;
  auto result = std::from_chars(text.data() + begin, text.data() + end, out);
  if (result.ec != std::errc() || result.ptr != text.data() + end) {
    throw ConfigError("money value '" + whole + "' is out of range");
  }
  return out;
}

long long pow10_checked(std::size_t digits, const std::string& whole) {
  long long out = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (out > 900'000'000'000'000'000LL / 10) {
      throw ConfigError("money value '" + whole + "' has too many decimal places");
    }
    out *= 10;
  }
  return out;
}

}  // namespace

std::string to_money_string(const Ratio& value) {
  std::string out = std::to_string(value.numerator());
  if (value.denominator() != 1) {
    out += "/";
    out += std::to_string(value.denominator());
  }
  return out;
}

Ratio parse_money(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin >= end) {
    throw ConfigError("invalid money value '" + text + "'");
  }
  bool negative = false;
  if (text[begin] == '-' || text[begin] == '+') {
    negative = text[begin] == '-';
    ++begin;
  }
  std::size_t slash = std::string::npos;
  std::size_t dot = std::string::npos;
  for (std::size_t i = begin; i < end; ++i) {
    if (text[i] == '/') slash = i;
    if (text[i] == '.') dot = i;
  }
  if (slash != std::string::npos && dot != std::string::npos) {
    throw ConfigError("invalid money value '" + text + "'");
  }
  Ratio value;
  if (slash != std::string::npos) {
    long long num = parse_int_part(text, begin, slash, text);
    long long den = parse_int_part(text, slash + 1, end, text);
    if (den == 0) {
      throw ConfigError("money value '" + text + "' has a zero denominator");
    }
    value = Ratio(num, den);
  } else if (dot != std::string::npos) {
    long long whole = (dot > begin) ? parse_int_part(text, begin, dot, text) : 0;
    std::size_t frac_digits = end - dot - 1;
    long long frac = parse_int_part(text, dot + 1, end, text);
    long long scale = pow10_checked(frac_digits, text);
    value = Ratio(whole) + Ratio(frac, scale);
  } else {
    value = Ratio(parse_int_part(text, begin, end, text));
  }
  return negative ? -value : value;
}

GridDomain GridDomain::make(const Ratio& h, const Ratio& delta) {
  if (h <= 0) {
    throw ConfigError("grid upper bound h must be positive, got " + to_money_string(h));
  }
  if (delta <= 0) {
    throw ConfigError("grid step delta must be positive, got " + to_money_string(delta));
  }
  Ratio q = h / delta;
  if (q.denominator() != 1) {
    throw ConfigError("h (" + to_money_string(h) + ") must be an integer multiple of delta (" +
                      to_money_string(delta) + ")");
  }
  GridDomain grid;
  grid.h = h;
  grid.delta = delta;
  grid.max_tick = q.numerator();
  return grid;
}

Tick GridDomain::to_tick(const Ratio& value) const {
  Ratio q = value / delta;
  if (q.denominator() != 1 || q.numerator() < 0 || q.numerator() > max_tick) {
    throw ConfigError("value " + to_money_string(value) + " is not on the grid (h=" +
                      to_money_string(h) + ", delta=" + to_money_string(delta) + ")");
  }
  return q.numerator();
}

std::vector<int> winner_list(WinnerSet set) {
  std::vector<int> out;
  for (int i = 0; set >> i; ++i) {
    if (wins(set, i)) out.push_back(i);
  }
  return out;
}

Tick social_welfare(WinnerSet winners, const BidProfile& bids) {
  if (bids.size() < 8 * sizeof(WinnerSet) && (winners >> bids.size()) != 0) {
    throw Error("winner set does not fit the bid profile");
  }
  Tick sum = 0;
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (wins(winners, static_cast<int>(i))) sum += bids[i];
  }
  return sum;
}

Tick social_cost(WinnerSet winners, const BidProfile& costs) {
  return social_welfare(winners, costs);
}

Tick utility(const Outcome& outcome, int agent, Tick true_type) {
  if (agent < 0 || static_cast<std::size_t>(agent) >= outcome.payments.size()) {
    throw Error("agent index out of range");
  }
  Tick value = wins(outcome.winners, agent) ? true_type : 0;
  Tick payment = outcome.payments[agent];
  return outcome.setting == Setting::kGoods ? value - payment : payment - value;
}

Tick total_payment(const Outcome& outcome) {
  Tick sum = 0;
  for (Tick p : outcome.payments) sum += p;
  return sum;
}

}  // namespace wonka
