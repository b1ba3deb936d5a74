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

// Literal transcriptions of published closed forms, kept apart from the
// normative constructions so they can be compared against them.
//
// Nothing here feeds the rest of the library. Each function reproduces a
// printed expression exactly, including the typos; CheckTranscriptions
// measures how far each one lands from the amplitude-product value.
//
// Angle naming follows the measurement: `measure` is the direction whose
// outcomes carry the eigenvalues, `basis` the direction whose outcomes label
// the matrix rows.

#ifndef GENPOL_ERRATA_H_
#define GENPOL_ERRATA_H_

#include <cstdint>
#include <string>
#include <vector>

#include "genpol/matrix2.h"
#include "genpol/state.h"
#include "genpol/types.h"

namespace genpol::errata {

/// Printed R21. Identical to R12 including the sign of the i/2 terms.
Complex Eq55Literal(const Direction& measure, const Direction& basis,
                    double r_plus, double r_minus);

/// Printed elements of the polarization operator. p12 and p21 carry
/// "-sin(theta_c) cos(theta_b)" where the derivation gives
/// "-sin(2 theta_c) cos(2 theta_b)".
Complex Eq57Literal(const Direction& measure, const Direction& basis);
Complex Eq58Literal(const Direction& measure, const Direction& basis);
Complex Eq59Literal(const Direction& measure, const Direction& basis);
Complex Eq60Literal(const Direction& measure, const Direction& basis);

/// Printed standard-limit operator. Its off-diagonal uses sin(theta_b) and
/// the phase e^{i(alpha_a - alpha_b)}, which depends on the initial-state
/// phase alpha_a.
Matrix2 Eq72Literal(const Direction& measure, double initial_alpha);

/// Printed standard-limit eigenvectors, which keep e^{i(alpha_b - alpha_c)}
/// after theta_c = alpha_c = 0 was substituted. Evaluated with the caller's
/// alpha_c.
StateVector2 Eq73Literal(const Direction& measure, double basis_alpha);
StateVector2 Eq74Literal(const Direction& measure, double basis_alpha);

enum class Route {
  kClosedMatrix,  // ObservableMatrixClosed, the matrix the library exposes
  kPrinted,       // the literal transcription above
};

/// Maximum discrepancy of one transcribed element over a set of draws.
struct EquationCheck {
  std::string equation;  // "Eq58"
  std::string element;   // "p12"
  Route route = Route::kPrinted;
  std::uint64_t draws = 0;
  double max_abs_diff = 0.0;
  Complex paper_value;    // at the worst draw
  Complex derived_value;  // at the worst draw
};

/// A transcription whose discrepancy exceeded the tolerance.
struct ErrataRecord {
  std::string equation;
  std::string element;
  Complex paper_value;
  Complex derived_value;
  double max_abs_diff = 0.0;
};

/// Compares every transcription against its derived value over `draws`
/// random parameter sets from stream `stream` of `seed`.
std::vector<EquationCheck> CheckTranscriptions(std::uint64_t draws,
                                               std::uint64_t seed,
                                               std::uint64_t stream);

std::vector<ErrataRecord> CollectErrata(const std::vector<EquationCheck>& checks,
                                        double tolerance);

}  // namespace genpol::errata

#endif  // GENPOL_ERRATA_H_
