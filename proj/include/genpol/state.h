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

#ifndef GENPOL_STATE_H_
#define GENPOL_STATE_H_

#include <algorithm>
#include <cmath>

#include "genpol/types.h"

namespace genpol {

/// Polarization state expressed relative to a reference direction: the
/// components are the amplitudes into the parallel and perpendicular
/// outcomes of that direction.
struct StateVector2 {
  Complex c_plus;
  Complex c_minus;

  Complex operator[](Branch b) const {
    return b == Branch::Plus ? c_plus : c_minus;
  }

  double NormSquared() const { return std::norm(c_plus) + std::norm(c_minus); }
  double Norm() const { return std::sqrt(NormSquared()); }

  bool IsNormalized(double tolerance = kDefaultTolerance) const {
    return std::abs(Norm() - 1.0) <= tolerance;
  }

  friend bool operator==(const StateVector2&, const StateVector2&) = default;
};

/// <u|v>, conjugate-linear in the first argument.
inline Complex Inner(const StateVector2& u, const StateVector2& v) {
  return std::conj(u.c_plus) * v.c_plus + std::conj(u.c_minus) * v.c_minus;
}

inline double MaxAbsDiff(const StateVector2& u, const StateVector2& v) {
  return std::max(std::abs(u.c_plus - v.c_plus),
                  std::abs(u.c_minus - v.c_minus));
}

}  // namespace genpol

#endif  // GENPOL_STATE_H_
