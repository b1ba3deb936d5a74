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

#ifndef GENPOL_CLI_H_
#define GENPOL_CLI_H_

#include <optional>
#include <ostream>
#include <string>

namespace genpol::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 2,
  kFileError = 3,
  kInvariantFailure = 4,
};

enum class AngleUnit { kDegrees, kRadians };

/// The only place command-line angles are converted.
double ToRadians(double value, AngleUnit unit);

/// Environment overrides. Command-line flags win over these, and these win
/// over values in a scenario file.
struct Environment {
  std::optional<std::string> tolerance;  // GENPOL_TOLERANCE
  std::optional<std::string> stage_cap;  // GENPOL_STAGE_CAP

  static Environment FromProcess();
};

/// Runs one command line. Output goes to `out`, diagnostics to `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err, const Environment& env);

}  // namespace genpol::cli

#endif  // GENPOL_CLI_H_
