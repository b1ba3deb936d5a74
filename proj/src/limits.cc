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

#include "genpol/limits.h"

#include <cmath>

namespace genpol {

StandardAmplitudes StandardAmplitudesFor(const Direction& a) {
  const double c = std::cos(a.theta);
  const double s = std::sin(a.theta);
  const Complex phase = std::polar(1.0, a.alpha);
  return {c, s * phase, -s, c * phase};
}

StandardStates StandardStatesFor(const Direction& a) {
  const StandardAmplitudes amps = StandardAmplitudesFor(a);
  return {{amps.parallel_plus, amps.parallel_minus},
          {amps.perpendicular_plus, amps.perpendicular_minus}};
}

Observable2 StandardOperator(const Direction& measure) {
  return PolarizationOperator(measure, kStandardDirection);
}

}  // namespace genpol
