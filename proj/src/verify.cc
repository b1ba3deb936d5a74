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

#include "genpol/verify.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "genpol/amplitudes.h"
#include "genpol/limits.h"
#include "genpol/operators.h"
#include "genpol/rng.h"

namespace genpol {

namespace oracle {

StateVector2 ReferenceState(const BranchLabel& label) {
  const double c = std::cos(label.direction.theta);
  const double s = std::sin(label.direction.theta);
  const Complex phase = std::polar(1.0, label.direction.alpha);
  if (label.branch == Branch::Plus) return {c, s * phase};
  return {-s, c * phase};
}

Amplitude InnerProductAmplitude(const BranchLabel& from, const BranchLabel& to) {
  return Inner(ReferenceState(to), ReferenceState(from));
}

Matrix2 SpectralMatrix(const Direction& measure, const Direction& basis,
                       double r_plus, double r_minus) {
  auto eigvec = [&](Branch s) {
    const BranchLabel m{measure, s};
    return StateVector2{InnerProductAmplitude(m, {basis, Branch::Plus}),
                        InnerProductAmplitude(m, {basis, Branch::Minus})};
  };
  return r_plus * Outer(eigvec(Branch::Plus)) +
         r_minus * Outer(eigvec(Branch::Minus));
}

std::array<EigenPair, 2> SolveHermitian(const Matrix2& m) {
  const double a = m.m11.real();
  const double d = m.m22.real();
  const Complex b = m.m12;
  const double half = 0.5 * (a - d);
  const double mean = 0.5 * (a + d);
  const double r = std::hypot(half, std::abs(b));
  if (r == 0.0) {
    return {EigenPair{mean, {1.0, 0.0}}, EigenPair{mean, {0.0, 1.0}}};
  }
  // Pick, for each eigenvalue, the null-space vector whose leading entry is
  // bounded away from zero by r.
  StateVector2 upper = half >= 0.0 ? StateVector2{half + r, std::conj(b)}
                                   : StateVector2{b, r - half};
  StateVector2 lower = half >= 0.0 ? StateVector2{b, -r - half}
                                   : StateVector2{half - r, std::conj(b)};
  auto normalize = [](StateVector2 v) {
    const double n = v.Norm();
    return StateVector2{v.c_plus / n, v.c_minus / n};
  };
  return {EigenPair{mean + r, normalize(upper)},
          EigenPair{mean - r, normalize(lower)}};
}

}  // namespace oracle

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Suite {
 public:
  Suite(std::string name, std::string covers, double tolerance)
      : result_{std::move(name), std::move(covers), 0, 0.0, tolerance, true} {}

  void Check(double residual) {
    ++result_.checks;
    if (!(residual <= result_.tolerance)) result_.passed = false;
    if (std::isnan(residual)) {
      result_.max_residual = residual;
    } else if (!std::isnan(result_.max_residual)) {
      result_.max_residual = std::max(result_.max_residual, residual);
    }
  }

  SuiteResult Finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

class Draws {
 public:
  Draws(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}

  double Angle() { return rng_.Uniform(-kTwoPi, kTwoPi); }
  Direction Dir() { return {Angle(), Angle()}; }
  Branch Br() { return rng_.Uniform() < 0.5 ? Branch::Plus : Branch::Minus; }
  BranchLabel Label() { return {Dir(), Br()}; }
  double Value() { return rng_.Uniform(-5.0, 5.0); }

 private:
  RandomStream rng_;
};

SuiteResult AmplitudeInnerProduct(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("amplitude_inner_product",
              "closed amplitudes vs Jones-vector inner products, 4 branch pairs",
              o.tolerance);
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction a = d.Dir(), b = d.Dir();
    for (Branch x : kBranches) {
      for (Branch y : kBranches) {
        suite.Check(std::abs(TransitionAmplitude({a, x}, {b, y}) -
                             oracle::InnerProductAmplitude({a, x}, {b, y})));
      }
    }
  }
  return suite.Finish();
}

SuiteResult Hermiticity(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("hermiticity", "chi(y,x) = conj(chi(x,y))", o.tolerance);
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction a = d.Dir(), b = d.Dir();
    for (Branch x : kBranches) {
      for (Branch y : kBranches) {
        const BranchLabel from{a, x}, to{b, y};
        suite.Check(std::abs(HermitianPartner(from, to) -
                             std::conj(TransitionAmplitude(from, to))));
      }
    }
  }
  return suite.Finish();
}

SuiteResult Orthonormality(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("orthonormality",
              "sum_s |chi(a,d_s)|^2 = 1 and sum_s chi(a+,d_s) conj(chi(a-,d_s)) = 0",
              o.tolerance);
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction a = d.Dir(), via = d.Dir();
    Complex overlap{0.0, 0.0};
    double norm_plus = 0.0, norm_minus = 0.0;
    for (Branch t : kBranches) {
      const Amplitude p = TransitionAmplitude({a, Branch::Plus}, {via, t});
      const Amplitude m = TransitionAmplitude({a, Branch::Minus}, {via, t});
      overlap += p * std::conj(m);
      norm_plus += std::norm(p);
      norm_minus += std::norm(m);
    }
    suite.Check(std::abs(norm_plus - 1.0));
    suite.Check(std::abs(norm_minus - 1.0));
    suite.Check(std::abs(overlap));
  }
  return suite.Finish();
}

SuiteResult Chaining(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("chaining", "sum over an arbitrary intermediate direction",
              o.tolerance);
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction a = d.Dir(), b = d.Dir(), via = d.Dir();
    for (Branch x : kBranches) {
      for (Branch y : kBranches) {
        const BranchLabel from{a, x}, to{b, y};
        suite.Check(
            std::abs(Chain(from, to, via) - TransitionAmplitude(from, to)));
      }
    }
  }
  return suite.Finish();
}

SuiteResult ProbabilityForms(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("probability_closed_forms",
              "closed probabilities vs squared moduli; P(++)=P(--), P(+-)=P(-+)",
              o.tolerance);
  Draws d(o.seed, s);
  constexpr auto P = Branch::Plus;
  constexpr auto M = Branch::Minus;
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction a = d.Dir(), b = d.Dir();
    for (Branch x : kBranches) {
      for (Branch y : kBranches) {
        suite.Check(std::abs(ProbabilityClosed({a, x}, {b, y}) -
                             Probability({a, x}, {b, y})));
      }
    }
    suite.Check(std::abs(Probability({a, P}, {b, P}) - Probability({a, M}, {b, M})));
    suite.Check(std::abs(Probability({a, P}, {b, M}) - Probability({a, M}, {b, P})));
    // The closed forms share one expression per pair, so these are exact.
    suite.Check(ProbabilityClosed({a, P}, {b, P}) ==
                        ProbabilityClosed({a, M}, {b, M})
                    ? 0.0
                    : 1.0);
    suite.Check(ProbabilityClosed({a, P}, {b, M}) ==
                        ProbabilityClosed({a, M}, {b, P})
                    ? 0.0
                    : 1.0);
  }
  return suite.Finish();
}

SuiteResult Periodicity(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("periodicity", "theta, alpha -> +2 pi on either argument",
              o.tolerance);
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const BranchLabel from = d.Label(), to = d.Label();
    const Amplitude base = TransitionAmplitude(from, to);
    BranchLabel shifted = from;
    shifted.direction.theta += kTwoPi;
    suite.Check(std::abs(TransitionAmplitude(shifted, to) - base));
    shifted = to;
    shifted.direction.alpha += kTwoPi;
    suite.Check(std::abs(TransitionAmplitude(from, shifted) - base));
  }
  return suite.Finish();
}

SuiteResult ClosedMatrix(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("closed_matrix",
              "expanded trigonometric observable vs amplitude-product and "
              "spectral forms",
              o.tolerance);
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction b = d.Dir(), c = d.Dir();
    const double rp = d.Value(), rm = d.Value();
    const Matrix2 closed = ObservableMatrixClosed(b, c, rp, rm).matrix;
    suite.Check(MaxAbsDiff(closed, ObservableMatrix(b, c, rp, rm).matrix));
    suite.Check(MaxAbsDiff(closed, oracle::SpectralMatrix(b, c, rp, rm)));
  }
  return suite.Finish();
}

SuiteResult SpectralIdentity(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("spectral_identity",
              "amplitude-product observable = r+ v+v+^dag + r- v-v-^dag",
              o.tolerance);
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction b = d.Dir(), c = d.Dir();
    const double rp = d.Value(), rm = d.Value();
    const Matrix2 product = ObservableMatrix(b, c, rp, rm).matrix;
    const EigenStates v = EigenvectorStates(b, c);
    suite.Check(MaxAbsDiff(product, rp * Outer(v.plus) + rm * Outer(v.minus)));
    suite.Check(MaxAbsDiff(product, oracle::SpectralMatrix(b, c, rp, rm)));
  }
  return suite.Finish();
}

SuiteResult Eigensolver(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("eigensolver",
              "generic Hermitian eigensolver vs attached eigenpairs",
              std::max(o.tolerance, kEigensolverTolerance));
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction b = d.Dir(), c = d.Dir();
    const double rp = d.Value();
    double rm = d.Value();
    while (std::abs(rp - rm) < 0.5) rm = d.Value();
    const Observable2 obs = ObservableMatrix(b, c, rp, rm);
    const EigenStates v = EigenvectorStates(b, c);
    const auto pairs = oracle::SolveHermitian(obs.matrix);
    const bool plus_first = rp >= rm;
    const auto& for_plus = plus_first ? pairs[0] : pairs[1];
    const auto& for_minus = plus_first ? pairs[1] : pairs[0];
    suite.Check(std::abs(for_plus.value - rp));
    suite.Check(std::abs(for_minus.value - rm));
    // Compare projectors so the arbitrary eigenvector phase drops out.
    suite.Check(MaxAbsDiff(Outer(for_plus.vector), Outer(v.plus)));
    suite.Check(MaxAbsDiff(Outer(for_minus.vector), Outer(v.minus)));
    const Matrix2 rebuilt = pairs[0].value * Outer(pairs[0].vector) +
                            pairs[1].value * Outer(pairs[1].vector);
    suite.Check(MaxAbsDiff(rebuilt, oracle::SpectralMatrix(b, c, rp, rm)));
  }
  return suite.Finish();
}

SuiteResult ObservableInvariants(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("observable_invariants",
              "Hermitian, trace = r+ + r-, det = r+ r- for both constructions",
              o.tolerance);
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction b = d.Dir(), c = d.Dir();
    const double rp = d.Value(), rm = d.Value();
    suite.Check(ObservableMatrix(b, c, rp, rm).InvariantResidual());
    suite.Check(ObservableMatrixClosed(b, c, rp, rm).InvariantResidual());
  }
  return suite.Finish();
}

SuiteResult EigenvalueEquation(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("eigenvalue_equation",
              "p xi+- = +-xi+-, p^2 = I, xi orthonormal, tr p = 0, det p = -1",
              o.tolerance);
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction b = d.Dir(), c = d.Dir();
    const Observable2 p = PolarizationOperator(b, c);
    const EigenStates xi = EigenvectorStates(b, c);
    for (Branch br : kBranches) {
      const StateVector2& v = xi.For(br);
      const StateVector2 pv = p.matrix * v;
      const double sign = Sign(br);
      suite.Check(std::max(std::abs(pv.c_plus - sign * v.c_plus),
                           std::abs(pv.c_minus - sign * v.c_minus)));
      suite.Check(std::abs(v.Norm() - 1.0));
    }
    suite.Check(std::abs(Inner(xi.plus, xi.minus)));
    suite.Check(MaxAbsDiff(p.matrix * p.matrix, Matrix2::Identity()));
    suite.Check(p.InvariantResidual());
  }
  return suite.Finish();
}

SuiteResult ExpectationConsistency(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("expectation_consistency",
              "matrix route vs probability route, independent of the basis",
              o.tolerance);
  Draws d(o.seed, s);
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const BranchLabel initial = d.Label();
    const Direction measure = d.Dir();
    const Direction basis1 = d.Dir(), basis2 = d.Dir();
    const double rp = d.Value(), rm = d.Value();

    const double closed = ExpectationClosed(initial, measure);
    const double by_probability = Probability(initial, {measure, Branch::Plus}) -
                                  Probability(initial, {measure, Branch::Minus});
    const double m1 = Expectation(StateVector(initial, basis1),
                                  PolarizationOperator(measure, basis1));
    const double m2 = Expectation(StateVector(initial, basis2),
                                  PolarizationOperator(measure, basis2));
    suite.Check(std::abs(m1 - closed));
    suite.Check(std::abs(m2 - closed));
    suite.Check(std::abs(by_probability - closed));

    // General observable: weighted outcome values.
    const double weighted =
        rp * Probability(initial, {measure, Branch::Plus}) +
        rm * Probability(initial, {measure, Branch::Minus});
    suite.Check(std::abs(Expectation(StateVector(initial, basis1),
                                     ObservableMatrix(measure, basis1, rp, rm)) -
                         weighted));
  }
  return suite.Finish();
}

SuiteResult StandardLimits(const VerifyOptions& o, std::uint64_t s) {
  Suite suite("standard_limits",
              "generalized forms at the (0,0) direction vs textbook forms",
              o.tolerance);
  Draws d(o.seed, s);
  constexpr Direction z = kStandardDirection;
  constexpr auto P = Branch::Plus;
  constexpr auto M = Branch::Minus;
  for (std::uint64_t n = 0; n < o.draws; ++n) {
    const Direction a = d.Dir();
    const StandardAmplitudes amps = StandardAmplitudesFor(a);
    suite.Check(std::abs(amps.parallel_plus - TransitionAmplitude({a, P}, {z, P})));
    suite.Check(std::abs(amps.parallel_minus - TransitionAmplitude({a, P}, {z, M})));
    suite.Check(std::abs(amps.perpendicular_plus - TransitionAmplitude({a, M}, {z, P})));
    suite.Check(std::abs(amps.perpendicular_minus - TransitionAmplitude({a, M}, {z, M})));

    const Direction rotated{a.theta + 0.5 * std::numbers::pi, a.alpha};
    const StandardAmplitudes turned = StandardAmplitudesFor(rotated);
    suite.Check(std::abs(turned.parallel_plus - amps.perpendicular_plus));
    suite.Check(std::abs(turned.parallel_minus - amps.perpendicular_minus));

    const StandardStates states = StandardStatesFor(a);
    suite.Check(MaxAbsDiff(states.plus, StateVector({a, P}, z)));
    suite.Check(MaxAbsDiff(states.minus, StateVector({a, M}, z)));
    suite.Check(MaxAbsDiff(states.plus, oracle::ReferenceState({a, P})));
    suite.Check(MaxAbsDiff(states.minus, oracle::ReferenceState({a, M})));

    const Direction b = d.Dir();
    const Observable2 p = StandardOperator(b);
    const Complex off = std::polar(std::sin(2.0 * b.theta), -b.alpha);
    suite.Check(MaxAbsDiff(p.matrix, Matrix2{std::cos(2.0 * b.theta), off,
                                             std::conj(off),
                                             -std::cos(2.0 * b.theta)}));
    suite.Check(std::abs(p.matrix.Trace()));
    suite.Check(MaxAbsDiff(p.matrix * p.matrix, Matrix2::Identity()));

    const EigenStates xi = EigenvectorStates(b, z);
    const Complex phase = std::polar(1.0, b.alpha);
    suite.Check(MaxAbsDiff(
        xi.plus, StateVector2{std::cos(b.theta), std::sin(b.theta) * phase}));
    suite.Check(MaxAbsDiff(
        xi.minus, StateVector2{-std::sin(b.theta), std::cos(b.theta) * phase}));
  }
  return suite.Finish();
}

}  // namespace

bool VerifyReport::AllPassed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& r) { return r.passed; });
}

const SuiteResult* VerifyReport::Find(const std::string& name) const {
  for (const SuiteResult& r : suites) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

VerifyReport RunVerify(const VerifyOptions& options) {
  using SuiteFn = SuiteResult (*)(const VerifyOptions&, std::uint64_t);
  static constexpr SuiteFn kSuites[] = {
      AmplitudeInnerProduct, Hermiticity,          Orthonormality,
      Chaining,              ProbabilityForms,     Periodicity,
      ClosedMatrix,          SpectralIdentity,     Eigensolver,
      ObservableInvariants,  EigenvalueEquation,   ExpectationConsistency,
      StandardLimits,
  };
  VerifyReport report;
  report.options = options;
  std::uint64_t stream = 0;
  for (SuiteFn fn : kSuites) report.suites.push_back(fn(options, stream++));
  report.transcriptions =
      errata::CheckTranscriptions(options.draws, options.seed, stream);
  report.errata = errata::CollectErrata(report.transcriptions, options.tolerance);
  return report;
}

}  // namespace genpol
