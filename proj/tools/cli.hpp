// Copyright 2026 The patstat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. Every command prints one record:
//   {command, inputs, result, kind, provenance}
// Exact integers and rationals are emitted as decimal strings.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace patstat::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kBudgetFailure = 2 };

struct OutputRecord {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::string kind;
  std::string provenance;

  bool operator==(const OutputRecord&) const = default;
};

void to_json(json& j, const OutputRecord& r);
void from_json(const json& j, OutputRecord& r);

/// Header line plus one row (or one row per table line for reproduce).
std::string to_csv(const OutputRecord& r);

struct ReproLine {
  std::string label;
  std::string ref_text;  // empty for informational lines
  double ref = 0;
  double computed = 0;
  double tolerance = 0;  // relative; 0 means exact equality
  bool pass = true;
  bool truncation_match = true;  // computed, cut to the reference digits, equals the reference value
};

std::vector<ReproLine> reproduce_lines();

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patstat::cli
