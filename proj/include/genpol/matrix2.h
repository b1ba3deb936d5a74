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

#ifndef GENPOL_MATRIX2_H_
#define GENPOL_MATRIX2_H_

#include <algorithm>
#include <cmath>

#include "genpol/state.h"
#include "genpol/types.h"

namespace genpol {

/// Dense complex 2x2 matrix; rows and columns are ordered (+, -).
struct Matrix2 {
  Complex m11, m12, m21, m22;

  static Matrix2 Identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex At(Branch row, Branch col) const {
    if (row == Branch::Plus) return col == Branch::Plus ? m11 : m12;
    return col == Branch::Plus ? m21 : m22;
  }

  Complex Trace() const { return m11 + m22; }
  Complex Determinant() const { return m11 * m22 - m12 * m21; }

  Matrix2 Adjoint() const {
    return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)};
  }

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }
  friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
  }
  friend Matrix2 operator*(double s, const Matrix2& a) {
    return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
  }
  friend StateVector2 operator*(const Matrix2& a, const StateVector2& v) {
    return {a.m11 * v.c_plus + a.m12 * v.c_minus,
            a.m21 * v.c_plus + a.m22 * v.c_minus};
  }
};

/// v v^dagger.
inline Matrix2 Outer(const StateVector2& v) {
  return {v.c_plus * std::conj(v.c_plus), v.c_plus * std::conj(v.c_minus),
          v.c_minus * std::conj(v.c_plus), v.c_minus * std::conj(v.c_minus)};
}

/// Largest elementwise modulus of a - b.
inline double MaxAbsDiff(const Matrix2& a, const Matrix2& b) {
  return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12),
                   std::abs(a.m21 - b.m21), std::abs(a.m22 - b.m22)});
}

/// Largest deviation from Hermiticity: imaginary diagonal parts and the
/// mismatch between m21 and conj(m12).
inline double HermiticityResidual(const Matrix2& a) {
  return std::max({std::abs(a.m11.imag()), std::abs(a.m22.imag()),
                   std::abs(a.m21 - std::conj(a.m12))});
}

}  // namespace genpol

#endif  // GENPOL_MATRIX2_H_
