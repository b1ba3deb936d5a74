// Copyright 2026 The genpol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON scenario files for analyzer chains.
//
//   {
//     "initial": {"theta_deg": 0, "alpha_deg": 0, "branch": "+"},
//     "stages": [{"theta_deg": 45, "alpha_deg": 0},
//                {"theta_deg": 90, "alpha_deg": 0}],
//     "seed": 7, "trials": 1000000, "tolerance": 1e-12
//   }
//
// Angles are degrees. alpha_deg defaults to 0; seed, trials and tolerance are
// optional. Unknown keys are rejected with their JSON pointer.

#ifndef GENPOL_SCENARIO_H_
#define GENPOL_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "genpol/simulate.h"

namespace genpol {

/// Malformed or unreadable scenario file; the message names the location.
class ScenarioFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioFile {
  MeasurementScenario scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<double> tolerance;
};

/// Parses "+", "-", "plus", "minus" (also the Unicode minus sign).
std::optional<Branch> ParseBranch(std::string_view text);

ScenarioFile ParseScenario(std::string_view text,
                           std::string_view source = "<input>");
ScenarioFile LoadScenario(const std::string& path);

}  // namespace genpol

#endif  // GENPOL_SCENARIO_H_
