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

#include "genpol/simulate.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <thread>

#include "genpol/amplitudes.h"
#include "genpol/rng.h"

namespace genpol {
namespace {

bool IsFinite(const Direction& d) {
  return std::isfinite(d.theta) && std::isfinite(d.alpha);
}

// plus_probability[k][i]: probability of + at stage k given the label left
// by the previous stage had branch i. Stage 0 only uses row i = 0 and reads
// from the initial label.
std::vector<std::array<double, 2>> ConditionalPlus(
    const MeasurementScenario& scenario) {
  std::vector<std::array<double, 2>> table(scenario.stages.size());
  for (std::size_t k = 0; k < scenario.stages.size(); ++k) {
    const BranchLabel next{scenario.stages[k], Branch::Plus};
    if (k == 0) {
      const double p = Probability(scenario.initial, next);
      table[k] = {p, p};
      continue;
    }
    for (Branch prev : kBranches) {
      table[k][Index(prev)] =
          Probability({scenario.stages[k - 1], prev}, next);
    }
  }
  return table;
}

double DeviationSigma(std::uint64_t count, std::uint64_t trials, double p) {
  const double n = static_cast<double>(trials);
  const double diff = std::abs(static_cast<double>(count) - n * p);
  const double variance = n * p * (1.0 - p);
  if (variance <= 0.0) {
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return diff / std::sqrt(variance);
}

}  // namespace

void Validate(const MeasurementScenario& scenario, std::size_t stage_cap) {
  if (scenario.stages.empty()) {
    throw ScenarioError("scenario has no measurement stages");
  }
  if (scenario.stages.size() > stage_cap) {
    throw ScenarioError("scenario has " +
                        std::to_string(scenario.stages.size()) +
                        " stages, above the stage cap of " +
                        std::to_string(stage_cap));
  }
  if (!IsFinite(scenario.initial.direction)) {
    throw ScenarioError("initial direction is not finite");
  }
  for (std::size_t k = 0; k < scenario.stages.size(); ++k) {
    if (!IsFinite(scenario.stages[k])) {
      throw ScenarioError("stage " + std::to_string(k) +
                          " direction is not finite");
    }
  }
}

Branch SequenceBranch(std::size_t index, std::size_t stages,
                      std::size_t stage) {
  return (index >> (stages - 1 - stage)) & 1U ? Branch::Minus : Branch::Plus;
}

std::string SequenceLabel(std::size_t index, std::size_t stages) {
  std::string label(stages, '+');
  for (std::size_t k = 0; k < stages; ++k) {
    label[k] = Symbol(SequenceBranch(index, stages, k));
  }
  return label;
}

double OutcomeDistribution::Total() const {
  double total = 0.0;
  for (double p : probabilities) total += p;
  return total;
}

OutcomeDistribution ExactDistribution(const MeasurementScenario& scenario,
                                      std::size_t stage_cap) {
  Validate(scenario, stage_cap);
  const auto table = ConditionalPlus(scenario);

  // Extend one stage at a time; appending a stage appends a low bit.
  std::vector<double> probs{1.0};
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::vector<double> next(probs.size() * 2);
    for (std::size_t i = 0; i < probs.size(); ++i) {
      const int prev = k == 0 ? 0 : static_cast<int>(i & 1U);
      const double plus = table[k][prev];
      next[2 * i] = probs[i] * plus;
      next[2 * i + 1] = probs[i] * (1.0 - plus);
    }
    probs = std::move(next);
  }
  return {scenario.stages.size(), std::move(probs)};
}

SampleReport Sample(const MeasurementScenario& scenario, std::uint64_t seed,
                    std::uint64_t trials, const SampleOptions& options) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const OutcomeDistribution exact =
      ExactDistribution(scenario, options.stage_cap);
  const auto table = ConditionalPlus(scenario);
  const std::size_t n_stages = scenario.stages.size();
  const std::size_t n_sequences = std::size_t{1} << n_stages;

  const std::uint64_t n_streams =
      (trials + kTrialsPerStream - 1) / kTrialsPerStream;
  unsigned workers = options.threads != 0
                         ? options.threads
                         : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, n_streams));

  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(n_sequences, 0));

  auto run_worker = [&](unsigned w) {
    auto& counts = partial[w];
    for (std::uint64_t stream = w; stream < n_streams; stream += workers) {
      RandomStream rng(seed, stream);
      const std::uint64_t begin = stream * kTrialsPerStream;
      const std::uint64_t end = std::min(trials, begin + kTrialsPerStream);
      for (std::uint64_t t = begin; t < end; ++t) {
        std::size_t index = 0;
        unsigned prev = 0;
        for (std::size_t k = 0; k < n_stages; ++k) {
          const unsigned bit = rng.Uniform() < table[k][prev] ? 0U : 1U;
          index = (index << 1) | bit;
          prev = bit;
        }
        ++counts[index];
      }
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& th : pool) th.join();
  }

  SampleReport report;
  report.seed = seed;
  report.trials = trials;
  report.stages = n_stages;
  report.counts.assign(n_sequences, 0);
  for (const auto& counts : partial) {
    for (std::size_t i = 0; i < n_sequences; ++i) report.counts[i] += counts[i];
  }
  report.deviation_sigma.resize(n_sequences);
  for (std::size_t i = 0; i < n_sequences; ++i) {
    report.deviation_sigma[i] =
        DeviationSigma(report.counts[i], trials, exact.probabilities[i]);
    report.max_abs_deviation_sigma =
        std::max(report.max_abs_deviation_sigma, report.deviation_sigma[i]);
  }
  return report;
}

}  // namespace genpol
