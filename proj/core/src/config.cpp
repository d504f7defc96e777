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

#include "wonka/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wonka {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) { throw ConfigError(message); }

void require_object(const json& value, const std::string& where) {
  if (!value.is_object()) bad(where + " must be an object");
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) bad("unknown key \"" + it.key() + "\" in " + where);
  }
}

const json& require_key(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + " needs \"" + std::string(key) + "\"");
  return *it;
}

Ratio money_from_json(const json& value, const std::string& where) {
  if (value.is_string()) return parse_money(value.get<std::string>());
  if (value.is_number_integer()) return Ratio(value.get<long long>());
  if (value.is_number()) {
    bad(where + ": non-integer numbers lose exactness; write money as a string like \"1/4\"");
  }
  bad(where + " must be a money string or a JSON integer");
}

long long int_from_json(const json& value, const std::string& where) {
  if (!value.is_number_integer()) bad(where + " must be an integer");
  return value.get<long long>();
}

std::string string_from_json(const json& value, const std::string& where) {
  if (!value.is_string()) bad(where + " must be a string");
  return value.get<std::string>();
}

bool is_wildcard(const json& value) {
  return value.is_string() && value.get<std::string>() == "*";
}

GridDomain parse_grid(const json& obj) {
  require_object(obj, "grid");
  reject_unknown(obj, "grid", {"h", "delta"});
  return GridDomain::make(money_from_json(require_key(obj, "grid", "h"), "grid.h"),
                          money_from_json(require_key(obj, "grid", "delta"), "grid.delta"));
}

WinnerSet mask_from_json(const json& arr, int n, const std::string& where) {
  if (!arr.is_array()) bad(where + " must be an array of agent indices");
  WinnerSet mask = 0;
  for (const auto& v : arr) {
    long long agent = int_from_json(v, where);
    if (agent < 0 || agent >= n) {
      bad(where + ": agent index " + std::to_string(agent) + " outside [0, " +
          std::to_string(n) + ")");
    }
    WinnerSet bit = WinnerSet{1} << agent;
    if (mask & bit) bad(where + ": agent " + std::to_string(agent) + " listed twice");
    mask |= bit;
  }
  return mask;
}

// Fills either cfg.set_spec (binary kinds) or cfg.space (kind "general",
// where the range from the allocator section is applied afterwards).
std::vector<std::vector<std::optional<std::string>>> parse_space(const json& obj,
                                                                 MechanismConfig& cfg) {
  require_object(obj, "space");
  std::string kind = string_from_json(require_key(obj, "space", "kind"), "space.kind");
  long long n = int_from_json(require_key(obj, "space", "n"), "space.n");
  if (n < 1 || n > kMaxAgents) {
    bad("space.n must be in [1, " + std::to_string(kMaxAgents) + "]");
  }
  if (kind == "general") {
    reject_unknown(obj, "space", {"kind", "n", "allocations"});
    const json& allocs = require_key(obj, "space", "allocations");
    if (!allocs.is_array() || allocs.empty()) {
      bad("space.allocations must be a nonempty array");
    }
    std::vector<std::vector<std::optional<std::string>>> rows;
    for (const auto& row : allocs) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
        bad("each allocation must list one entry per agent");
      }
      std::vector<std::optional<std::string>> parsed;
      for (const auto& cell : row) {
        if (cell.is_null()) {
          parsed.push_back(std::nullopt);
        } else {
          parsed.push_back(string_from_json(cell, "space.allocations entry"));
        }
      }
      rows.push_back(std::move(parsed));
    }
    return rows;
  }
  SetSystemSpec spec;
  spec.n = static_cast<int>(n);
  if (kind == "digital_goods") {
    reject_unknown(obj, "space", {"kind", "n"});
    spec.kind = SetKind::kDigitalGoods;
  } else if (kind == "single_item") {
    reject_unknown(obj, "space", {"kind", "n"});
    spec.kind = SetKind::kSingleItem;
  } else if (kind == "k_unit") {
    reject_unknown(obj, "space", {"kind", "n", "k"});
    spec.kind = SetKind::kKUnit;
    spec.k = static_cast<int>(int_from_json(require_key(obj, "space", "k"), "space.k"));
  } else if (kind == "knapsack") {
    reject_unknown(obj, "space", {"kind", "n", "weights", "capacity"});
    spec.kind = SetKind::kKnapsack;
    const json& weights = require_key(obj, "space", "weights");
    if (!weights.is_array() || weights.size() != static_cast<std::size_t>(n)) {
      bad("space.weights must list one weight per agent");
    }
    for (const auto& w : weights) spec.weights.push_back(money_from_json(w, "space.weights"));
    spec.capacity = money_from_json(require_key(obj, "space", "capacity"), "space.capacity");
  } else if (kind == "explicit") {
    reject_unknown(obj, "space", {"kind", "n", "family"});
    spec.kind = SetKind::kExplicit;
    const json& family = require_key(obj, "space", "family");
    if (!family.is_array() || family.empty()) {
      bad("space.family must be a nonempty array of feasible sets");
    }
    bool has_empty = false;
    for (const auto& set : family) {
      WinnerSet mask = mask_from_json(set, spec.n, "space.family set");
      if (mask == 0) has_empty = true;
      spec.family.push_back(mask);
    }
    spec.include_empty = cfg.setting == Setting::kGoods && !has_empty;
  } else {
    bad("space.kind \"" + kind +
        "\" is not one of digital_goods, single_item, k_unit, knapsack, explicit, general");
  }
  cfg.set_spec = spec;
  return {};
}

std::vector<int> parse_allocator(const json* obj, MechanismConfig& cfg) {
  std::vector<int> range;
  if (obj == nullptr) {
    if (cfg.rule == Rule::kWonkaGeneral) {
      cfg.allocator.kind = AllocatorKind::kMaximalInRange;
    } else if (cfg.setting == Setting::kProcurement) {
      cfg.allocator.kind = AllocatorKind::kExactCost;
    } else {
      cfg.allocator.kind = AllocatorKind::kExactWelfare;
    }
    return range;
  }
  require_object(*obj, "allocator");
  reject_unknown(*obj, "allocator", {"kind", "range"});
  std::string kind = string_from_json(require_key(*obj, "allocator", "kind"), "allocator.kind");
  if (kind == "exact_welfare") {
    cfg.allocator.kind = AllocatorKind::kExactWelfare;
  } else if (kind == "exact_cost") {
    cfg.allocator.kind = AllocatorKind::kExactCost;
  } else if (kind == "greedy_knapsack") {
    cfg.allocator.kind = AllocatorKind::kGreedyKnapsack;
  } else if (kind == "maximal_in_range") {
    cfg.allocator.kind = AllocatorKind::kMaximalInRange;
  } else {
    bad("allocator.kind \"" + kind +
        "\" is not one of exact_welfare, exact_cost, greedy_knapsack, maximal_in_range");
  }
  auto it = obj->find("range");
  if (it != obj->end()) {
    if (cfg.allocator.kind != AllocatorKind::kMaximalInRange) {
      bad("allocator.range applies only to maximal_in_range");
    }
    if (!it->is_array()) bad("allocator.range must be an array of allocation indices");
    for (const auto& v : *it) {
      range.push_back(static_cast<int>(int_from_json(v, "allocator.range")));
    }
  }
  return range;
}

std::vector<Tick> coord_vector_from_json(const json& arr, const GridDomain& grid,
                                         const std::string& where) {
  if (!arr.is_array()) bad(where + " must be an array of money values");
  std::vector<Tick> out{0};  // the empty allocation is always worth 0
  for (const auto& v : arr) out.push_back(grid.to_tick(money_from_json(v, where)));
  return out;
}

void parse_designated_spoons(const json& value, MechanismConfig& cfg) {
  if (is_wildcard(value)) bad("designated_spoons cannot be \"*\"; use \"all_h\" or entries");
  if (value.is_string()) {
    if (value.get<std::string>() != "all_h") {
      bad("designated_spoons must be \"all_h\" or an array of entries");
    }
    cfg.spoons.all_h = true;
    return;
  }
  if (!value.is_array()) bad("designated_spoons must be \"all_h\" or an array of entries");
  cfg.spoons.all_h = false;
  for (const auto& entry : value) {
    require_object(entry, "designated_spoons entry");
    reject_unknown(entry, "designated_spoons entry", {"agent", "bid", "opponents"});
    int agent = static_cast<int>(
        int_from_json(require_key(entry, "designated_spoons entry", "agent"), "spoon agent"));
    const json& bid = require_key(entry, "designated_spoons entry", "bid");
    const json& opponents = require_key(entry, "designated_spoons entry", "opponents");
    if (!opponents.is_array()) bad("spoon opponents must be an array");
    if (cfg.rule == Rule::kWonkaGeneral) {
      GeneralSpoonEntry parsed;
      parsed.agent = agent;
      if (!is_wildcard(bid)) {
        parsed.bid = coord_vector_from_json(bid, cfg.grid, "spoon bid");
      }
      for (const auto& opp : opponents) {
        parsed.opponents.push_back(coord_vector_from_json(opp, cfg.grid, "spoon opponent"));
      }
      cfg.spoons.general.push_back(std::move(parsed));
    } else {
      BinarySpoonEntry parsed;
      parsed.agent = agent;
      if (!is_wildcard(bid)) {
        parsed.bid = cfg.grid.to_tick(money_from_json(bid, "spoon bid"));
      }
      for (const auto& opp : opponents) {
        parsed.opponents.push_back(cfg.grid.to_tick(money_from_json(opp, "spoon opponent")));
      }
      cfg.spoons.binary.push_back(std::move(parsed));
    }
  }
}

void parse_mechanism(const json& obj, MechanismConfig& cfg) {
  require_object(obj, "mechanism");
  reject_unknown(obj, "mechanism", {"rule", "wooden_spoon_policy", "designated_spoons"});
  std::string rule = string_from_json(require_key(obj, "mechanism", "rule"), "mechanism.rule");
  if (rule == "wonka_binary") {
    cfg.rule = Rule::kWonkaBinary;
  } else if (rule == "wonka_general") {
    cfg.rule = Rule::kWonkaGeneral;
  } else if (rule == "wonka_procurement") {
    cfg.rule = Rule::kWonkaProcurement;
  } else if (rule == "vickrey") {
    cfg.rule = Rule::kVickrey;
  } else if (rule == "first_price") {
    cfg.rule = Rule::kFirstPrice;
  } else if (rule == "always_allocate_first_price") {
    cfg.rule = Rule::kAlwaysAllocateFirstPrice;
  } else {
    bad("mechanism.rule \"" + rule +
        "\" is not one of wonka_binary, wonka_general, wonka_procurement, vickrey, "
        "first_price, always_allocate_first_price");
  }
  auto policy = obj.find("wooden_spoon_policy");
  if (policy != obj.end()) {
    std::string name = string_from_json(*policy, "mechanism.wooden_spoon_policy");
    if (name == "feasibility") {
      cfg.spoon_policy = SpoonPolicy::kFeasibility;
    } else if (name == "designated") {
      cfg.spoon_policy = SpoonPolicy::kDesignated;
    } else {
      bad("mechanism.wooden_spoon_policy must be feasibility or designated");
    }
  }
  auto spoons = obj.find("designated_spoons");
  if (spoons != obj.end()) {
    if (cfg.spoon_policy != SpoonPolicy::kDesignated) {
      bad("designated_spoons requires wooden_spoon_policy = designated");
    }
    parse_designated_spoons(*spoons, cfg);
  }
}

std::vector<Check> parse_checks(const json* arr, Setting setting) {
  std::vector<Check> checks;
  if (arr == nullptr) {
    checks = {Check::kNom, Check::kStructure,
              setting == Setting::kGoods ? Check::kRatio : Check::kFrugality, Check::kIr};
    return checks;
  }
  if (!arr->is_array()) bad("checks must be an array of check names");
  for (const auto& v : *arr) {
    std::string name = string_from_json(v, "checks entry");
    Check check;
    if (name == "nom") {
      check = Check::kNom;
    } else if (name == "structure") {
      check = Check::kStructure;
    } else if (name == "ratio") {
      check = Check::kRatio;
    } else if (name == "frugality") {
      check = Check::kFrugality;
    } else {
      if (name != "ir") {
        bad("checks entry \"" + name + "\" is not one of nom, structure, ratio, frugality, ir");
      }
      check = Check::kIr;
    }
    for (Check seen : checks) {
      if (seen == check) bad("checks lists \"" + name + "\" twice");
    }
    if (check == Check::kRatio && setting == Setting::kProcurement) {
      bad("the ratio check applies to goods mode; use frugality for procurement");
    }
    if (check == Check::kFrugality && setting == Setting::kGoods) {
      bad("the frugality check applies to procurement mode");
    }
    checks.push_back(check);
  }
  return checks;
}

}  // namespace

std::string check_name(Check check) {
  switch (check) {
    case Check::kNom:
      return "nom";
    case Check::kStructure:
      return "structure";
    case Check::kRatio:
      return "ratio";
    case Check::kFrugality:
      return "frugality";
    case Check::kIr:
      return "ir";
  }
  throw Error("unreachable check kind");
}

HarnessConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("config is not valid JSON: ") + e.what());
  }
  require_object(doc, "config");
  reject_unknown(doc, "config",
                 {"setting", "grid", "space", "allocator", "mechanism", "checks", "output"});
  HarnessConfig out;
  MechanismConfig& cfg = out.mechanism;
  std::string setting = string_from_json(require_key(doc, "config", "setting"), "setting");
  if (setting == "goods") {
    cfg.setting = Setting::kGoods;
  } else if (setting == "procurement") {
    cfg.setting = Setting::kProcurement;
  } else {
    bad("setting must be goods or procurement");
  }
  cfg.grid = parse_grid(require_key(doc, "config", "grid"));
  // Rule first: spoon entries and allocator defaults depend on it.
  parse_mechanism(require_key(doc, "config", "mechanism"), cfg);
  auto general_rows = parse_space(require_key(doc, "config", "space"), cfg);
  auto allocator_it = doc.find("allocator");
  std::vector<int> range =
      parse_allocator(allocator_it == doc.end() ? nullptr : &*allocator_it, cfg);
  if (!general_rows.empty()) {
    cfg.space = GeneralSpace::create(general_rows, range.empty() ? nullptr : &range);
  } else if (!range.empty()) {
    bad("allocator.range needs a general space");
  }
  if ((cfg.rule == Rule::kWonkaGeneral) != cfg.space.has_value()) {
    bad(cfg.space.has_value() ? "a general space needs mechanism.rule = wonka_general"
                              : "the wonka_general rule needs space.kind = general");
  }
  auto checks_it = doc.find("checks");
  out.checks = parse_checks(checks_it == doc.end() ? nullptr : &*checks_it, cfg.setting);
  auto output_it = doc.find("output");
  if (output_it != doc.end()) {
    require_object(*output_it, "output");
    reject_unknown(*output_it, "output", {"path"});
    out.output_path = string_from_json(require_key(*output_it, "output", "path"), "output.path");
  }
  validate_config(cfg);
  return out;
}

HarnessConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace wonka
