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

// Generalized transition amplitudes between arbitrary polarization outcomes.
//
// A single amplitude function covers every pair of outcomes. The first
// argument always labels the state known before the measurement and the
// second the outcome being asked about. With a = from.direction,
// b = to.direction and d = alpha_a - alpha_b:
//
//   (+,+)  cos a cos b + sin a sin b e^{i d}
//   (+,-) -cos a sin b + sin a cos b e^{i d}
//   (-,+) -sin a cos b + cos a sin b e^{i d}
//   (-,-)  sin a sin b + cos a cos b e^{i d}

#ifndef GENPOL_AMPLITUDES_H_
#define GENPOL_AMPLITUDES_H_

#include "genpol/state.h"
#include "genpol/types.h"

namespace genpol {

Amplitude TransitionAmplitude(const BranchLabel& from, const BranchLabel& to);

/// |TransitionAmplitude(from, to)|^2.
double Probability(const BranchLabel& from, const BranchLabel& to);

/// Probability from the closed trigonometric forms; P(++) and P(--) share one
/// expression, as do P(+-) and P(-+).
double ProbabilityClosed(const BranchLabel& from, const BranchLabel& to);

/// Sum over both outcomes of `via` of amplitude(from, via_s) *
/// amplitude(via_s, to). Equal to TransitionAmplitude(from, to) for any via.
Amplitude Chain(const BranchLabel& from, const BranchLabel& to,
                const Direction& via);

/// Reverse-direction amplitude, amplitude(to, from). Equals the complex
/// conjugate of TransitionAmplitude(from, to).
Amplitude HermitianPartner(const BranchLabel& from, const BranchLabel& to);

/// State of `label` written in the outcome basis of `reference`: component s
/// is TransitionAmplitude(label, {reference, s}).
StateVector2 StateVector(const BranchLabel& label, const Direction& reference);

}  // namespace genpol

#endif  // GENPOL_AMPLITUDES_H_
