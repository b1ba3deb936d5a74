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

// Direction-dependent 2x2 observables.
//
// An observable R takes the value r_plus when a measurement along
// `measure_dir` finds the polarization parallel and r_minus when it finds it
// perpendicular. Its matrix is written in the outcome basis of `basis_dir`:
//
//   R_ij = sum_s conj(chi(basis_i, measure_s)) chi(basis_j, measure_s) R_s
//
// This amplitude-product form is what ObservableMatrix builds. The expanded
// trigonometric form lives in ObservableMatrixClosed and is kept only as a
// cross-check.

#ifndef GENPOL_OPERATORS_H_
#define GENPOL_OPERATORS_H_

#include <stdexcept>
#include <string>

#include "genpol/matrix2.h"
#include "genpol/state.h"
#include "genpol/types.h"

namespace genpol {

struct Observable2 {
  Matrix2 matrix;
  double r_plus = 1.0;
  double r_minus = -1.0;
  Direction measure_dir;
  Direction basis_dir;

  /// Largest violation among Hermiticity, trace = r_plus + r_minus and
  /// det = r_plus * r_minus.
  double InvariantResidual() const;
};

/// Eigenvectors of an observable, as amplitudes from the measured outcomes
/// into the basis outcomes. `plus` belongs to r_plus, `minus` to r_minus.
struct EigenStates {
  StateVector2 plus;
  StateVector2 minus;

  const StateVector2& For(Branch b) const {
    return b == Branch::Plus ? plus : minus;
  }
};

/// Thrown by Expectation when the state is not unit norm.
class NotNormalizedError : public std::invalid_argument {
 public:
  explicit NotNormalizedError(double norm)
      : std::invalid_argument("state vector is not normalized (norm = " +
                              std::to_string(norm) + ")"),
        norm_(norm) {}

  double norm() const { return norm_; }

 private:
  double norm_;
};

Observable2 ObservableMatrix(const Direction& measure, const Direction& basis,
                             double r_plus, double r_minus);

/// Expanded trigonometric form of ObservableMatrix.
Observable2 ObservableMatrixClosed(const Direction& measure,
                                   const Direction& basis, double r_plus,
                                   double r_minus);

/// ObservableMatrix with r_plus = +1, r_minus = -1.
Observable2 PolarizationOperator(const Direction& measure,
                                 const Direction& basis);

/// plus = (chi(measure+, basis+), chi(measure+, basis-)), minus likewise from
/// measure-. Phases are exactly those of the amplitude formulas; no
/// re-phasing is applied.
EigenStates EigenvectorStates(const Direction& measure, const Direction& basis);

/// state^dagger R state. Throws NotNormalizedError when |norm - 1| exceeds
/// `tolerance`. The imaginary residue is discarded.
double Expectation(const StateVector2& state, const Observable2& obs,
                   double tolerance = kDefaultTolerance);

/// Expectation of the polarization observable along `measure` for a photon
/// prepared in `initial`, as P(initial, measure+) - P(initial, measure-).
double ExpectationClosed(const BranchLabel& initial, const Direction& measure);

}  // namespace genpol

#endif  // GENPOL_OPERATORS_H_
