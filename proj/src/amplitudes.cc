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

#include "genpol/amplitudes.h"

#include <cmath>

namespace genpol {

Direction Canonicalize(Direction d) {
  constexpr double kPi = std::numbers::pi;
  double theta = std::fmod(d.theta, kPi);
  if (theta < 0.0) theta += kPi;
  double alpha = std::fmod(d.alpha, 2.0 * kPi);
  if (alpha < 0.0) alpha += 2.0 * kPi;
  // fmod can land exactly on the upper bound after the shift.
  if (theta >= kPi) theta = 0.0;
  if (alpha >= 2.0 * kPi) alpha = 0.0;
  return {theta, alpha};
}

Amplitude TransitionAmplitude(const BranchLabel& from, const BranchLabel& to) {
  const double ca = std::cos(from.direction.theta);
  const double sa = std::sin(from.direction.theta);
  const double cb = std::cos(to.direction.theta);
  const double sb = std::sin(to.direction.theta);
  const Complex phase = std::polar(1.0, from.direction.alpha - to.direction.alpha);

  if (from.branch == Branch::Plus) {
    if (to.branch == Branch::Plus) return ca * cb + sa * sb * phase;
    return -ca * sb + sa * cb * phase;
  }
  if (to.branch == Branch::Plus) return -sa * cb + ca * sb * phase;
  return sa * sb + ca * cb * phase;
}

double Probability(const BranchLabel& from, const BranchLabel& to) {
  return std::norm(TransitionAmplitude(from, to));
}

double ProbabilityClosed(const BranchLabel& from, const BranchLabel& to) {
  const double a = from.direction.theta;
  const double b = to.direction.theta;
  const double ca = std::cos(a), sa = std::sin(a);
  const double cb = std::cos(b), sb = std::sin(b);
  const double cross = 0.5 * std::sin(2.0 * a) * std::sin(2.0 * b) *
                       std::cos(from.direction.alpha - to.direction.alpha);
  if (from.branch == to.branch) {
    return ca * ca * cb * cb + sa * sa * sb * sb + cross;
  }
  return ca * ca * sb * sb + sa * sa * cb * cb - cross;
}

Amplitude Chain(const BranchLabel& from, const BranchLabel& to,
                const Direction& via) {
  Amplitude sum{0.0, 0.0};
  for (Branch s : kBranches) {
    const BranchLabel mid{via, s};
    sum += TransitionAmplitude(from, mid) * TransitionAmplitude(mid, to);
  }
  return sum;
}

Amplitude HermitianPartner(const BranchLabel& from, const BranchLabel& to) {
  return TransitionAmplitude(to, from);
}

StateVector2 StateVector(const BranchLabel& label, const Direction& reference) {
  return {TransitionAmplitude(label, {reference, Branch::Plus}),
          TransitionAmplitude(label, {reference, Branch::Minus})};
}

}  // namespace genpol
