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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wonka/config.hpp"
#include "wonka/harness.hpp"
#include "wonka/report.hpp"
#include "wonka/structure.hpp"
#include "wonka/verifier.hpp"

namespace {

using namespace wonka;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

BidProfile parse_binary_profile(const std::string& text, const MechanismConfig& cfg) {
  std::vector<std::string> parts = split(text, ',');
  if (static_cast<int>(parts.size()) != agent_count(cfg)) {
    throw ConfigError("profile lists " + std::to_string(parts.size()) + " bids; the mechanism has " +
                      std::to_string(agent_count(cfg)) + " agents");
  }
  BidProfile bids;
  for (const std::string& p : parts) bids.push_back(cfg.grid.to_tick(parse_money(p)));
  return bids;
}

// Agents separated by ';', each agent's nonempty-allocation values by ','.
MultiBid parse_general_profile(const std::string& text, const MechanismConfig& cfg) {
  const GeneralSpace& space = *cfg.space;
  std::vector<std::string> agents = split(text, ';');
  if (static_cast<int>(agents.size()) != space.n) {
    throw ConfigError("profile lists " + std::to_string(agents.size()) +
                      " agents; the space has " + std::to_string(space.n));
  }
  MultiBid mb;
  for (int i = 0; i < space.n; ++i) {
    std::vector<std::string> coords = split(agents[static_cast<std::size_t>(i)], ',');
    if (static_cast<int>(coords.size()) != space.coords(i) - 1) {
      throw ConfigError("agent " + std::to_string(i) + " needs " +
                        std::to_string(space.coords(i) - 1) + " values, got " +
                        std::to_string(coords.size()));
    }
    std::vector<Tick> bid{0};
    for (const std::string& c : coords) bid.push_back(cfg.grid.to_tick(parse_money(c)));
    mb.push_back(std::move(bid));
  }
  return mb;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

std::string suffixed_path(const std::string& base, const std::string& check) {
  std::filesystem::path p(base);
  std::filesystem::path renamed = p.parent_path();
  renamed /= p.stem().string() + "_" + check + p.extension().string();
  return renamed.string();
}

// Emits one report: to `path` when set, otherwise to stdout.
void emit(const std::optional<std::string>& path, const std::string& csv) {
  if (path) {
    write_file(*path, csv);
  } else {
    std::cout << csv;
  }
}

std::string ratio_or_dash(const std::optional<Ratio>& r) {
  return r ? to_money_string(*r) : std::string("-");
}

struct CheckResult {
  bool pass = true;
  std::string summary;
  std::string csv;
};

CheckResult run_check(Check check, const HarnessConfig& hc, const SweepOptions& opts) {
  const MechanismConfig& cfg = hc.mechanism;
  CheckResult result;
  switch (check) {
    case Check::kNom: {
      if (uses_general_space(cfg)) {
        GeneralNomReport report = check_nom_general(cfg, opts);
        result.pass = report.pass();
        result.summary = std::to_string(report.violation_count) + " witnesses";
        result.csv = render_general_witness_csv(cfg.grid, *cfg.space, report.witnesses);
      } else {
        NomReport report = check_nom(cfg, opts);
        result.pass = report.pass();
        result.summary = std::to_string(report.violation_count) + " witnesses";
        result.csv = render_witness_csv(cfg.grid, report.witnesses);
      }
      break;
    }
    case Check::kStructure: {
      StructureReport report = is_willy_wonka(cfg, opts);
      result.pass = report.willy_wonka;
      result.summary = std::string("willy_wonka: ") + (report.willy_wonka ? "true" : "false");
      result.csv = uses_general_space(cfg)
                       ? render_general_structure_csv(cfg.grid, *cfg.space, report.general_rows)
                       : render_structure_csv(cfg.grid, report.rows);
      break;
    }
    case Check::kRatio: {
      RatioReport report = competitive_ratio(cfg, opts);
      result.pass = report.satisfied;
      result.summary = "aggregate: " + ratio_or_dash(report.aggregate) +
                       ", excluding designated: " +
                       ratio_or_dash(report.aggregate_excluding_designated) +
                       ", bound: " + to_money_string(report.bound) +
                       ", satisfied: " + (report.satisfied ? "true" : "false");
      result.csv = render_ratio_csv(cfg.grid, report);
      break;
    }
    case Check::kFrugality: {
      FrugalityReport report = fr2(cfg, opts);
      result.pass = report.satisfied;
      result.summary = "aggregate: " + ratio_or_dash(report.aggregate) +
                       ", bound: " + to_money_string(report.bound) +
                       ", satisfied: " + (report.satisfied ? "true" : "false");
      result.csv = render_frugality_csv(cfg.grid, report);
      break;
    }
    case Check::kIr: {
      IrReport report = check_ir_and_transfers(cfg, opts);
      result.pass = report.pass();
      result.summary = std::to_string(report.violations.size()) + " violations";
      result.csv = render_ir_csv(report);
      break;
    }
  }
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Willy Wonka auction toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string profile;
  std::string out_path;
  int jobs = 1;
  std::uint64_t witness_cap = 100;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "experiment config (JSON)")->required();
    cmd->add_option("--out", out_path, "report output path");
  };
  auto add_sweep_flags = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker threads for sweeps");
    cmd->add_option("--witness-cap", witness_cap, "stored witnesses cap");
  };

  CLI::App* cmd_run = app.add_subcommand("run", "evaluate the mechanism on one bid profile");
  add_common(cmd_run);
  cmd_run->add_option("--profile", profile, "bids: money values, ',' between agents (general spaces: ';' between agents, ',' between values)")
      ->required();

  CLI::App* cmd_nom = app.add_subcommand("verify-nom", "exhaustive NOM check");
  CLI::App* cmd_structure = app.add_subcommand("structure", "golden-ticket / wooden-spoon report");
  CLI::App* cmd_ratio = app.add_subcommand("ratio", "competitive-ratio sweep");
  CLI::App* cmd_frugality = app.add_subcommand("frugality", "frugality-ratio sweep");
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "run every check the config asks for");
  for (CLI::App* cmd : {cmd_nom, cmd_structure, cmd_ratio, cmd_frugality, cmd_sweep}) {
    add_common(cmd);
    add_sweep_flags(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    HarnessConfig hc = load_config(config_path);
    const MechanismConfig& cfg = hc.mechanism;
    std::optional<std::string> out;
    if (!out_path.empty()) {
      out = out_path;
    } else if (hc.output_path) {
      out = hc.output_path;
    }
    SweepOptions opts;
    opts.jobs = jobs;
    opts.witness_cap = static_cast<std::size_t>(witness_cap);

    if (*cmd_run) {
      std::string csv;
      if (uses_general_space(cfg)) {
        GeneralOutcome outcome = run_mechanism_general(cfg, parse_general_profile(profile, cfg));
        csv = render_general_outcome_csv(cfg.grid, *cfg.space, outcome);
      } else {
        Outcome outcome = run_mechanism(cfg, parse_binary_profile(profile, cfg));
        csv = render_outcome_csv(cfg.grid, outcome);
      }
      emit(out, csv);
      return 0;
    }

    if (*cmd_sweep) {
      bool all_pass = true;
      for (Check check : hc.checks) {
        CheckResult result = run_check(check, hc, opts);
        all_pass = all_pass && result.pass;
        if (out) {
          write_file(suffixed_path(*out, check_name(check)), result.csv);
        } else {
          std::cout << "== " << check_name(check) << " ==\n" << result.csv;
        }
        std::cout << check_name(check) << ": " << (result.pass ? "pass" : "fail") << " ("
                  << result.summary << ")\n";
      }
      return all_pass ? 0 : 1;
    }

    Check check = Check::kNom;
    if (*cmd_structure) check = Check::kStructure;
    if (*cmd_ratio) check = Check::kRatio;
    if (*cmd_frugality) check = Check::kFrugality;
    CheckResult result = run_check(check, hc, opts);
    emit(out, result.csv);
    std::cout << result.summary << '\n';
    return result.pass ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
