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

#include "genpol/operators.h"

#include <algorithm>
#include <cmath>

#include "genpol/amplitudes.h"

namespace genpol {

double Observable2::InvariantResidual() const {
  const double trace_err =
      std::abs(matrix.Trace() - Complex(r_plus + r_minus, 0.0));
  const double det_err =
      std::abs(matrix.Determinant() - Complex(r_plus * r_minus, 0.0));
  return std::max({HermiticityResidual(matrix), trace_err, det_err});
}

Observable2 ObservableMatrix(const Direction& measure, const Direction& basis,
                             double r_plus, double r_minus) {
  auto element = [&](Branch i, Branch j) {
    Complex sum{0.0, 0.0};
    for (Branch s : kBranches) {
      const BranchLabel outcome{measure, s};
      const double value = s == Branch::Plus ? r_plus : r_minus;
      sum += std::conj(TransitionAmplitude({basis, i}, outcome)) *
             TransitionAmplitude({basis, j}, outcome) * value;
    }
    return sum;
  };
  Observable2 obs;
  obs.matrix = {element(Branch::Plus, Branch::Plus),
                element(Branch::Plus, Branch::Minus),
                element(Branch::Minus, Branch::Plus),
                element(Branch::Minus, Branch::Minus)};
  obs.r_plus = r_plus;
  obs.r_minus = r_minus;
  obs.measure_dir = measure;
  obs.basis_dir = basis;
  return obs;
}

Observable2 ObservableMatrixClosed(const Direction& measure,
                                   const Direction& basis, double r_plus,
                                   double r_minus) {
  const double tb = measure.theta;
  const double tc = basis.theta;
  const double delta = basis.alpha - measure.alpha;
  const double cb = std::cos(tb), sb = std::sin(tb);
  const double cc = std::cos(tc), sc = std::sin(tc);
  const double s2b = std::sin(2.0 * tb), c2b = std::cos(2.0 * tb);
  const double s2c = std::sin(2.0 * tc), c2c = std::cos(2.0 * tc);
  const double cross = 0.5 * s2c * s2b * std::cos(delta);

  const double r11 =
      (cc * cc * cb * cb + sc * sc * sb * sb + cross) * r_plus +
      (cc * cc * sb * sb + sc * sc * cb * cb - cross) * r_minus;
  const Complex off(-0.5 * s2c * c2b + 0.5 * s2b * c2c * std::cos(delta),
                    0.5 * s2b * std::sin(delta));
  const Complex r12 = off * r_plus - off * r_minus;
  // The published R21 repeats R12 verbatim; the amplitude-product definition
  // makes it the conjugate of R12 (see errata::Eq55Literal).
  const Complex r21 = std::conj(off) * r_plus - std::conj(off) * r_minus;
  const double r22 =
      (sc * sc * cb * cb + cc * cc * sb * sb - cross) * r_plus +
      (sc * sc * sb * sb + cc * cc * cb * cb + cross) * r_minus;

  Observable2 obs;
  obs.matrix = {r11, r12, r21, r22};
  obs.r_plus = r_plus;
  obs.r_minus = r_minus;
  obs.measure_dir = measure;
  obs.basis_dir = basis;
  return obs;
}

Observable2 PolarizationOperator(const Direction& measure,
                                 const Direction& basis) {
  return ObservableMatrix(measure, basis, 1.0, -1.0);
}

EigenStates EigenvectorStates(const Direction& measure,
                              const Direction& basis) {
  return {StateVector({measure, Branch::Plus}, basis),
          StateVector({measure, Branch::Minus}, basis)};
}

double Expectation(const StateVector2& state, const Observable2& obs,
                   double tolerance) {
  const double norm = state.Norm();
  if (!(std::abs(norm - 1.0) <= tolerance)) throw NotNormalizedError(norm);
  return Inner(state, obs.matrix * state).real();
}

double ExpectationClosed(const BranchLabel& initial, const Direction& measure) {
  const double a = initial.direction.theta;
  const double b = measure.theta;
  const double value =
      std::cos(2.0 * a) * std::cos(2.0 * b) +
      std::sin(2.0 * a) * std::sin(2.0 * b) *
          std::cos(initial.direction.alpha - measure.alpha);
  return initial.branch == Branch::Plus ? value : -value;
}

}  // namespace genpol
