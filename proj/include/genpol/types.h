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

#ifndef GENPOL_TYPES_H_
#define GENPOL_TYPES_H_

#include <array>
#include <complex>
#include <numbers>
#include <string_view>

namespace genpol {

using Complex = std::complex<double>;

/// Transition amplitude between two measurement outcomes.
using Amplitude = Complex;

/// Default bound used by every invariant check in the library.
inline constexpr double kDefaultTolerance = 1e-12;

/// A polarization measurement context for a photon travelling along z.
///
/// `theta` is the plane angle from the x axis and `alpha` the relative phase
/// between the x and y field components, both in radians. Values are used as
/// given; every formula is periodic, so no range is enforced.
struct Direction {
  double theta = 0.0;
  double alpha = 0.0;

  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Maps theta into [0, pi) and alpha into [0, 2 pi).
///
/// Note theta -> theta + pi flips the overall sign of the parallel state, so
/// the result describes the same physical direction, not the same amplitude
/// values. Never applied implicitly.
Direction Canonicalize(Direction d);

/// Direction of the x axis with zero relative phase.
inline constexpr Direction kStandardDirection{0.0, 0.0};

/// Outcome of a polarization measurement: parallel (Plus) or
/// perpendicular (Minus) to the measured direction.
enum class Branch { Plus, Minus };

inline constexpr std::array<Branch, 2> kBranches{Branch::Plus, Branch::Minus};

constexpr Branch Flip(Branch b) {
  return b == Branch::Plus ? Branch::Minus : Branch::Plus;
}

/// Eigenvalue of the polarization observable for this branch.
constexpr double Sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

/// Row/column index of the branch in 2x2 matrices and state vectors.
constexpr int Index(Branch b) { return b == Branch::Plus ? 0 : 1; }

constexpr char Symbol(Branch b) { return b == Branch::Plus ? '+' : '-'; }

/// One of the two outcomes of a measurement along `direction`.
struct BranchLabel {
  Direction direction;
  Branch branch = Branch::Plus;

  friend bool operator==(const BranchLabel&, const BranchLabel&) = default;
};

inline constexpr double DegreesToRadians(double degrees) {
  return degrees * (std::numbers::pi / 180.0);
}

}  // namespace genpol

#endif  // GENPOL_TYPES_H_
