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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "wonka/config.hpp"

using namespace wonka;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

bool parse_fails_with(const std::string& text, const std::string& needle) {
  return parse_error(text).find(needle) != std::string::npos;
}

const char* kKUnitText = R"({
  "setting": "goods",
  "grid": {"h": "1", "delta": "1/4"},
  "mechanism": {"rule": "wonka_binary"},
  "space": {"kind": "k_unit", "n": 3, "k": 2}
})";

const char* kPairText = R"({
  "setting": "procurement",
  "grid": {"h": 1, "delta": "1/4"},
  "mechanism": {"rule": "wonka_procurement"},
  "space": {"kind": "explicit", "n": 3, "family": [[0, 1], [2]]}
})";

const char* kGeneralText = R"({
  "setting": "goods",
  "grid": {"h": "1", "delta": "1/2"},
  "mechanism": {
    "rule": "wonka_general",
    "wooden_spoon_policy": "designated",
    "designated_spoons": [
      {"agent": 0, "bid": ["1"], "opponents": [["1/2"]]},
      {"agent": 0, "bid": "*", "opponents": [["1"]]},
      {"agent": 1, "bid": "*", "opponents": [["0"]]}
    ]
  },
  "space": {
    "kind": "general",
    "n": 2,
    "allocations": [[null, null], ["A", null], [null, "b"], ["A", "b"]]
  },
  "allocator": {"kind": "maximal_in_range", "range": [0, 1, 2, 3]},
  "checks": ["nom", "structure", "ratio", "ir"],
  "output": {"path": "out.csv"}
})";

}  // namespace

TEST_CASE("a minimal goods config parses with defaults") {
  HarnessConfig hc = parse_config_text(kKUnitText);
  CHECK(hc.mechanism.setting == Setting::kGoods);
  CHECK(hc.mechanism.rule == Rule::kWonkaBinary);
  CHECK(hc.mechanism.grid.max_tick == 4);
  CHECK(hc.mechanism.allocator.kind == AllocatorKind::kExactWelfare);
  CHECK(hc.mechanism.spoon_policy == SpoonPolicy::kFeasibility);
  REQUIRE(hc.mechanism.family.has_value());
  CHECK(hc.mechanism.family->tau() == 2);
  CHECK(hc.checks == std::vector<Check>{Check::kNom, Check::kStructure, Check::kRatio,
                                        Check::kIr});
  CHECK_FALSE(hc.output_path.has_value());
}

TEST_CASE("procurement defaults swap in frugality and exact cost") {
  HarnessConfig hc = parse_config_text(kPairText);
  CHECK(hc.mechanism.setting == Setting::kProcurement);
  CHECK(hc.mechanism.allocator.kind == AllocatorKind::kExactCost);
  CHECK(hc.checks == std::vector<Check>{Check::kNom, Check::kStructure, Check::kFrugality,
                                        Check::kIr});
  REQUIRE(hc.mechanism.family.has_value());
  CHECK(hc.mechanism.family->sets() == std::vector<WinnerSet>{0b011u, 0b100u});
  CHECK(hc.mechanism.gammas.size() == 3);
}

TEST_CASE("the general config round-trips spoons, range, and output") {
  HarnessConfig hc = parse_config_text(kGeneralText);
  CHECK(hc.mechanism.rule == Rule::kWonkaGeneral);
  CHECK(hc.mechanism.allocator.kind == AllocatorKind::kMaximalInRange);
  REQUIRE(hc.mechanism.space.has_value());
  const GeneralSpace& space = *hc.mechanism.space;
  CHECK(space.n == 2);
  CHECK(space.ids[0] == std::vector<std::string>{"", "A"});
  CHECK(space.ids[1] == std::vector<std::string>{"", "b"});
  CHECK(space.range == std::vector<int>{0, 1, 2, 3});

  CHECK(hc.mechanism.spoon_policy == SpoonPolicy::kDesignated);
  CHECK_FALSE(hc.mechanism.spoons.all_h);
  REQUIRE(hc.mechanism.spoons.general.size() == 3);
  const GeneralSpoonEntry& exact = hc.mechanism.spoons.general[0];
  CHECK(exact.agent == 0);
  REQUIRE(exact.bid.has_value());
  CHECK(*exact.bid == std::vector<Tick>{0, 2});   // the empty coordinate is pinned to 0
  CHECK(exact.opponents == std::vector<std::vector<Tick>>{{0, 1}});
  CHECK_FALSE(hc.mechanism.spoons.general[1].bid.has_value());

  CHECK(hc.checks.size() == 4);
  REQUIRE(hc.output_path.has_value());
  CHECK(*hc.output_path == "out.csv");
}

TEST_CASE("unknown keys are rejected at every level") {
  CHECK(parse_fails_with(R"({"setting": "goods", "bogus": 1})", "unknown key \"bogus\""));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4", "step": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2}
  })", "unknown key \"step\" in grid"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary", "tie_break": "rotate"},
    "space": {"kind": "k_unit", "n": 3, "k": 2}
  })", "unknown key \"tie_break\" in mechanism"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2, "units": 2}
  })", "unknown key \"units\" in space"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2},
    "allocator": {"kind": "exact_welfare", "mode": "fast"}
  })", "unknown key \"mode\" in allocator"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2},
    "output": {"path": "x.csv", "format": "csv"}
  })", "unknown key \"format\" in output"));
}

TEST_CASE("money must be exact") {
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": 0.25},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2}
  })", "lose exactness"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": true, "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2}
  })", "must be a money string or a JSON integer"));

  // Decimal strings and JSON integers stay exact and are fine.
  HarnessConfig hc = parse_config_text(R"({
    "setting": "goods",
    "grid": {"h": 1, "delta": "0.25"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2}
  })");
  CHECK(hc.mechanism.grid.max_tick == 4);
}

TEST_CASE("checks lists are validated") {
  std::string base = R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2},
    "checks": )";
  CHECK(parse_fails_with(base + R"(["bogus"]})", "not one of nom, structure, ratio"));
  CHECK(parse_fails_with(base + R"(["nom", "nom"]})", "lists \"nom\" twice"));
  CHECK(parse_fails_with(base + R"(["frugality"]})", "applies to procurement mode"));

  HarnessConfig hc = parse_config_text(base + R"(["ir"]})");
  CHECK(hc.checks == std::vector<Check>{Check::kIr});

  std::string proc = R"({
    "setting": "procurement",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_procurement"},
    "space": {"kind": "explicit", "n": 3, "family": [[0, 1], [2]]},
    "checks": ["ratio"]
  })";
  CHECK(parse_fails_with(proc, "applies to goods mode"));
}

TEST_CASE("allocator ranges need a general space") {
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2},
    "allocator": {"kind": "exact_welfare", "range": [0]}
  })", "applies only to maximal_in_range"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2},
    "allocator": {"kind": "maximal_in_range", "range": [0]}
  })", "allocator.range needs a general space"));
}

TEST_CASE("rule and space kinds must agree") {
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_general"},
    "space": {"kind": "k_unit", "n": 3, "k": 2}
  })", "needs space.kind = general"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/2"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "general", "n": 2,
              "allocations": [[null, null], ["A", null], [null, "b"], ["A", "b"]]}
  })", "needs mechanism.rule = wonka_general"));
}

TEST_CASE("designated spoons are gated and validated") {
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary", "designated_spoons": "all_h"},
    "space": {"kind": "digital_goods", "n": 3}
  })", "requires wooden_spoon_policy = designated"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary", "wooden_spoon_policy": "designated",
                  "designated_spoons": "*"},
    "space": {"kind": "digital_goods", "n": 3}
  })", "cannot be \"*\""));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/2"},
    "mechanism": {"rule": "wonka_binary", "wooden_spoon_policy": "designated",
                  "designated_spoons": [
                    {"agent": 0, "bid": "*", "opponents": ["1"]}
                  ]},
    "space": {"kind": "digital_goods", "n": 2}
  })", "designated spoons must be total"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/2"},
    "mechanism": {"rule": "wonka_binary", "wooden_spoon_policy": "designated",
                  "designated_spoons": [
                    {"agent": 0, "bid": "1/3", "opponents": ["1"]},
                    {"agent": 1, "bid": "*", "opponents": ["1"]}
                  ]},
    "space": {"kind": "digital_goods", "n": 2}
  })", "1/3"));

  HarnessConfig hc = parse_config_text(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/5"},
    "mechanism": {"rule": "wonka_binary", "wooden_spoon_policy": "designated",
                  "designated_spoons": "all_h"},
    "space": {"kind": "digital_goods", "n": 3}
  })");
  CHECK(hc.mechanism.spoon_policy == SpoonPolicy::kDesignated);
  CHECK(hc.mechanism.spoons.all_h);
}

TEST_CASE("space validation names the offence") {
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "pyramid", "n": 3}
  })", "space.kind \"pyramid\""));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "digital_goods", "n": 0}
  })", "space.n must be in [1, 20]"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "explicit", "n": 3, "family": [[0, 5]]}
  })", "outside [0, 3)"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "explicit", "n": 3, "family": [[0, 0]]}
  })", "listed twice"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "knapsack", "n": 3, "weights": ["1", "2"], "capacity": "3"}
  })", "one weight per agent"));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/2"},
    "mechanism": {"rule": "wonka_general"},
    "space": {"kind": "general", "n": 2, "allocations": [[null, null], ["A"]]}
  })", "one entry per agent"));
}

TEST_CASE("top level structure errors are caught") {
  CHECK(parse_fails_with("[]", "config must be an object"));
  CHECK(parse_fails_with("{not json", "config is not valid JSON"));
  CHECK(parse_fails_with(R"({"setting": "auction"})", "setting must be goods or procurement"));
  CHECK(parse_fails_with(R"({"setting": "goods"})", "config needs \"grid\""));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1"},
    "mechanism": {"rule": "wonka_binary"},
    "space": {"kind": "k_unit", "n": 3, "k": 2}
  })", "grid needs \"delta\""));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "dutch"},
    "space": {"kind": "k_unit", "n": 3, "k": 2}
  })", "mechanism.rule \"dutch\""));
  CHECK(parse_fails_with(R"({
    "setting": "goods",
    "grid": {"h": "1", "delta": "1/4"},
    "mechanism": {"rule": "wonka_binary", "wooden_spoon_policy": "sometimes"},
    "space": {"kind": "k_unit", "n": 3, "k": 2}
  })", "must be feasibility or designated"));
}

TEST_CASE("load_config reports unreadable files") {
  try {
    load_config("/nonexistent/wonka.json");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("cannot read config file") != std::string::npos);
  }
}

TEST_CASE("check names are stable") {
  CHECK(check_name(Check::kNom) == "nom");
  CHECK(check_name(Check::kStructure) == "structure");
  CHECK(check_name(Check::kRatio) == "ratio");
  CHECK(check_name(Check::kFrugality) == "frugality");
  CHECK(check_name(Check::kIr) == "ir");
}
