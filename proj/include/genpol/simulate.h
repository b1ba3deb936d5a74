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

// Sequential analyzer chains.
//
// A photon prepared in `initial` passes a list of ideal analyzers. Each stage
// reports + or - with the single-step probability from the current label,
// after which the photon is left exactly in the label (stage direction,
// outcome). The projective collapse is an extension: the amplitude formulas
// themselves only describe one measurement from a known label.
//
// Outcome sequences are indexed with stage 0 in the most significant bit and
// + encoded as 0, so index order is lexicographic on strings like "+-+".

#ifndef GENPOL_SIMULATE_H_
#define GENPOL_SIMULATE_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "genpol/types.h"

namespace genpol {

inline constexpr std::size_t kDefaultStageCap = 20;

/// Trials per random stream in Sample.
inline constexpr std::uint64_t kTrialsPerStream = 1 << 16;

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MeasurementScenario {
  BranchLabel initial;
  std::vector<Direction> stages;
};

/// Throws ScenarioError for an empty stage list, non-finite angles or more
/// stages than `stage_cap`.
void Validate(const MeasurementScenario& scenario, std::size_t stage_cap);

std::string SequenceLabel(std::size_t index, std::size_t stages);
Branch SequenceBranch(std::size_t index, std::size_t stages, std::size_t stage);

struct OutcomeDistribution {
  std::size_t stages = 0;
  std::vector<double> probabilities;  // 2^stages entries

  double Total() const;
};

struct SampleReport {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::size_t stages = 0;
  std::vector<std::uint64_t> counts;
  /// |count - N p| / sqrt(N p (1 - p)) per sequence; 0 or +inf when the exact
  /// probability is 0 or 1.
  std::vector<double> deviation_sigma;
  double max_abs_deviation_sigma = 0.0;

  friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

struct SampleOptions {
  std::size_t stage_cap = kDefaultStageCap;
  /// 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned threads = 0;
};

OutcomeDistribution ExactDistribution(const MeasurementScenario& scenario,
                                      std::size_t stage_cap = kDefaultStageCap);

/// Monte Carlo realization of ExactDistribution. Deterministic in
/// (scenario, seed, trials); throws std::invalid_argument for trials == 0.
SampleReport Sample(const MeasurementScenario& scenario, std::uint64_t seed,
                    std::uint64_t trials, const SampleOptions& options = {});

}  // namespace genpol

#endif  // GENPOL_SIMULATE_H_
