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

#ifndef WONKA_CONFIG_HPP_
#define WONKA_CONFIG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wonka/mechanisms.hpp"

namespace wonka {

enum class Check { kNom, kStructure, kRatio, kFrugality, kIr };

std::string check_name(Check check);

struct HarnessConfig {
  MechanismConfig mechanism;
  std::vector<Check> checks;
  std::optional<std::string> output_path;
};

// Parses the JSON experiment description. Strict: unknown keys are rejected,
// money must be a string ("1/4", "0.25", "3") or a JSON integer, never a
// float. Agent indices are 0-based. The returned mechanism is already
// validated (validate_config has run).
HarnessConfig parse_config_text(const std::string& text);

HarnessConfig load_config(const std::string& path);

}  // namespace wonka

#endif  // WONKA_CONFIG_HPP_
