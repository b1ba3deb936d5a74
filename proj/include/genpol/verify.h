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

// Randomized invariant suites and the independent oracles they rely on.
//
// The oracles never call the amplitude formulas: they start from the Jones
// vectors (cos t, sin t e^{ia}) and (-sin t, cos t e^{ia}) and use plain
// inner products, projector sums and a generic Hermitian eigensolver.

#ifndef GENPOL_VERIFY_H_
#define GENPOL_VERIFY_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "genpol/errata.h"
#include "genpol/matrix2.h"
#include "genpol/state.h"
#include "genpol/types.h"

namespace genpol {

namespace oracle {

/// Jones vector of a branch in the fixed x/y frame.
StateVector2 ReferenceState(const BranchLabel& label);

/// <to|from> between Jones vectors.
Amplitude InnerProductAmplitude(const BranchLabel& from, const BranchLabel& to);

/// r_plus P_plus + r_minus P_minus with the projectors written in the basis
/// outcomes: P_s = v_s v_s^dagger, v_s = (<basis+|measure s>, <basis-|measure s>).
Matrix2 SpectralMatrix(const Direction& measure, const Direction& basis,
                       double r_plus, double r_minus);

struct EigenPair {
  double value;
  StateVector2 vector;
};

/// Eigenpairs of a Hermitian 2x2 matrix, larger eigenvalue first. Vectors are
/// unit norm with an arbitrary phase; a degenerate matrix yields the
/// coordinate axes.
std::array<EigenPair, 2> SolveHermitian(const Matrix2& m);

}  // namespace oracle

/// Eigenvector comparisons against the generic solver use this bound; they
/// lose a few digits to the square root in the eigenvalue formula.
inline constexpr double kEigensolverTolerance = 1e-10;

struct VerifyOptions {
  std::uint64_t draws = 100000;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
};

struct SuiteResult {
  std::string name;
  std::string covers;  // which relations the suite exercises
  std::uint64_t checks = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<SuiteResult> suites;
  std::vector<errata::EquationCheck> transcriptions;
  std::vector<errata::ErrataRecord> errata;

  bool AllPassed() const;
  const SuiteResult* Find(const std::string& name) const;
};

/// Runs every invariant suite over `options.draws` random parameter sets.
/// Errata are reported but never make a suite fail.
VerifyReport RunVerify(const VerifyOptions& options);

}  // namespace genpol

#endif  // GENPOL_VERIFY_H_
