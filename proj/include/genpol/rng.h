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

// Seeded random streams.
//
// All randomness comes from std::mt19937_64, whose output sequence is fixed by
// the standard. Doubles are built from the top 53 bits by hand because the
// standard distributions are implementation-defined.
//
// Stream-split rule: stream k of a run with seed s is an mt19937_64 seeded
// with SplitMix64(s + (k + 1) * 0x9E3779B97F4A7C15). Work that is split into
// streams must assign streams to fixed slices of the index space, never to
// workers.

#ifndef GENPOL_RNG_H_
#define GENPOL_RNG_H_

#include <cstdint>
#include <random>

namespace genpol {

/// SplitMix64 output function.
constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(seed + (stream + 1) * 0x9E3779B97F4A7C15ULL);
}

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream)
      : engine_(StreamSeed(seed, stream)) {}

  /// Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace genpol

#endif  // GENPOL_RNG_H_
