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

// Textbook polarization formulas as boundary values of the generalized ones.
//
// Amplitudes and states reduce by fixing the final direction to (0, 0).
// Operators and eigenvectors reduce by fixing the basis direction to (0, 0),
// since that is the direction the basis now plays.

#ifndef GENPOL_LIMITS_H_
#define GENPOL_LIMITS_H_

#include "genpol/operators.h"
#include "genpol/state.h"
#include "genpol/types.h"

namespace genpol {

struct StandardAmplitudes {
  Amplitude parallel_plus;        // cos a
  Amplitude parallel_minus;       // sin a e^{i alpha}
  Amplitude perpendicular_plus;   // -sin a
  Amplitude perpendicular_minus;  // cos a e^{i alpha}
};

struct StandardStates {
  StateVector2 plus;   // (cos a, sin a e^{i alpha})
  StateVector2 minus;  // (-sin a, cos a e^{i alpha})
};

StandardAmplitudes StandardAmplitudesFor(const Direction& a);
StandardStates StandardStatesFor(const Direction& a);

/// PolarizationOperator(measure, kStandardDirection):
/// [[cos 2b, sin 2b e^{-i alpha_b}], [sin 2b e^{i alpha_b}, -cos 2b]].
Observable2 StandardOperator(const Direction& measure);

}  // namespace genpol

#endif  // GENPOL_LIMITS_H_
