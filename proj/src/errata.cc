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

#include "genpol/errata.h"

#include <cmath>
#include <iterator>
#include <utility>
#include <numbers>

#include "genpol/limits.h"
#include "genpol/operators.h"
#include "genpol/rng.h"

namespace genpol::errata {
namespace {

constexpr Complex kI{0.0, 1.0};

struct Trig {
  double s2b, c2b, s2c, c2c, sc, cb, delta;
};

Trig Angles(const Direction& measure, const Direction& basis) {
  return {std::sin(2.0 * measure.theta), std::cos(2.0 * measure.theta),
          std::sin(2.0 * basis.theta),   std::cos(2.0 * basis.theta),
          std::sin(basis.theta),         std::cos(measure.theta),
          basis.alpha - measure.alpha};
}

}  // namespace

Complex Eq55Literal(const Direction& measure, const Direction& basis,
                    double r_plus, double r_minus) {
  const Trig t = Angles(measure, basis);
  const Complex plus_coeff = -0.5 * t.s2c * t.c2b +
                             0.5 * t.s2b * t.c2c * std::cos(t.delta) +
                             0.5 * kI * t.s2b * std::sin(t.delta);
  const Complex minus_coeff = 0.5 * t.s2c * t.c2b -
                              0.5 * t.s2b * t.c2c * std::cos(t.delta) -
                              0.5 * kI * t.s2b * std::sin(t.delta);
  return plus_coeff * r_plus + minus_coeff * r_minus;
}

Complex Eq57Literal(const Direction& measure, const Direction& basis) {
  const Trig t = Angles(measure, basis);
  return t.c2c * t.c2b + t.s2c * t.s2b * std::cos(t.delta);
}

Complex Eq58Literal(const Direction& measure, const Direction& basis) {
  const Trig t = Angles(measure, basis);
  return -t.sc * t.cb + t.c2c * t.s2b * std::cos(t.delta) +
         kI * t.s2b * std::sin(t.delta);
}

Complex Eq59Literal(const Direction& measure, const Direction& basis) {
  const Trig t = Angles(measure, basis);
  return -t.sc * t.cb + t.c2c * t.s2b * std::cos(t.delta) -
         kI * t.s2b * std::sin(t.delta);
}

Complex Eq60Literal(const Direction& measure, const Direction& basis) {
  const Trig t = Angles(measure, basis);
  return -t.c2c * t.c2b - t.s2c * t.s2b * std::cos(t.delta);
}

Matrix2 Eq72Literal(const Direction& measure, double initial_alpha) {
  const double c2b = std::cos(2.0 * measure.theta);
  const double sb = std::sin(measure.theta);
  const Complex phase = std::polar(1.0, initial_alpha - measure.alpha);
  return {c2b, sb * phase, sb * std::conj(phase), -c2b};
}

StateVector2 Eq73Literal(const Direction& measure, double basis_alpha) {
  const Complex phase = std::polar(1.0, measure.alpha - basis_alpha);
  return {std::cos(measure.theta), std::sin(measure.theta) * phase};
}

StateVector2 Eq74Literal(const Direction& measure, double basis_alpha) {
  const Complex phase = std::polar(1.0, measure.alpha - basis_alpha);
  return {-std::sin(measure.theta), std::cos(measure.theta) * phase};
}

std::vector<EquationCheck> CheckTranscriptions(std::uint64_t draws,
                                               std::uint64_t seed,
                                               std::uint64_t stream) {
  struct Sample {
    Direction measure, basis;
    double r_plus, r_minus, initial_alpha;
  };
  // Everything derived from one draw, computed once and shared by the probes.
  struct Values {
    Matrix2 closed, derived, pol, standard, eq72;
    EigenStates standard_vecs;
    StateVector2 eq73, eq74;
    Complex eq55, eq57, eq58, eq59, eq60;
  };
  struct Probe {
    const char* equation;
    const char* element;
    Route route;
    // (printed value, derived value)
    std::pair<Complex, Complex> (*eval)(const Values&);
  };

  static constexpr Probe kProbes[] = {
      {"Eq53", "R11", Route::kClosedMatrix,
       [](const Values& v) { return std::pair{v.closed.m11, v.derived.m11}; }},
      {"Eq54", "R12", Route::kClosedMatrix,
       [](const Values& v) { return std::pair{v.closed.m12, v.derived.m12}; }},
      {"Eq55", "R21", Route::kClosedMatrix,
       [](const Values& v) { return std::pair{v.closed.m21, v.derived.m21}; }},
      {"Eq56", "R22", Route::kClosedMatrix,
       [](const Values& v) { return std::pair{v.closed.m22, v.derived.m22}; }},
      {"Eq55", "R21", Route::kPrinted,
       [](const Values& v) { return std::pair{v.eq55, v.derived.m21}; }},
      {"Eq57", "p11", Route::kPrinted,
       [](const Values& v) { return std::pair{v.eq57, v.pol.m11}; }},
      {"Eq58", "p12", Route::kPrinted,
       [](const Values& v) { return std::pair{v.eq58, v.pol.m12}; }},
      {"Eq59", "p21", Route::kPrinted,
       [](const Values& v) { return std::pair{v.eq59, v.pol.m21}; }},
      {"Eq60", "p22", Route::kPrinted,
       [](const Values& v) { return std::pair{v.eq60, v.pol.m22}; }},
      {"Eq72", "m11", Route::kPrinted,
       [](const Values& v) { return std::pair{v.eq72.m11, v.standard.m11}; }},
      {"Eq72", "m12", Route::kPrinted,
       [](const Values& v) { return std::pair{v.eq72.m12, v.standard.m12}; }},
      {"Eq72", "m21", Route::kPrinted,
       [](const Values& v) { return std::pair{v.eq72.m21, v.standard.m21}; }},
      {"Eq72", "m22", Route::kPrinted,
       [](const Values& v) { return std::pair{v.eq72.m22, v.standard.m22}; }},
      {"Eq73", "xi+[0]", Route::kPrinted,
       [](const Values& v) {
         return std::pair{v.eq73.c_plus, v.standard_vecs.plus.c_plus};
       }},
      {"Eq73", "xi+[1]", Route::kPrinted,
       [](const Values& v) {
         return std::pair{v.eq73.c_minus, v.standard_vecs.plus.c_minus};
       }},
      {"Eq74", "xi-[0]", Route::kPrinted,
       [](const Values& v) {
         return std::pair{v.eq74.c_plus, v.standard_vecs.minus.c_plus};
       }},
      {"Eq74", "xi-[1]", Route::kPrinted,
       [](const Values& v) {
         return std::pair{v.eq74.c_minus, v.standard_vecs.minus.c_minus};
       }},
  };

  std::vector<EquationCheck> checks;
  for (const Probe& p : kProbes) {
    checks.push_back({p.equation, p.element, p.route, draws, 0.0, {}, {}});
  }

  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  RandomStream rng(seed, stream);
  for (std::uint64_t n = 0; n < draws; ++n) {
    Sample s;
    s.measure = {rng.Uniform(-kTwoPi, kTwoPi), rng.Uniform(-kTwoPi, kTwoPi)};
    s.basis = {rng.Uniform(-kTwoPi, kTwoPi), rng.Uniform(-kTwoPi, kTwoPi)};
    s.r_plus = rng.Uniform(-5.0, 5.0);
    s.r_minus = rng.Uniform(-5.0, 5.0);
    s.initial_alpha = rng.Uniform(-kTwoPi, kTwoPi);
    Values v;
    v.closed =
        ObservableMatrixClosed(s.measure, s.basis, s.r_plus, s.r_minus).matrix;
    v.derived =
        ObservableMatrix(s.measure, s.basis, s.r_plus, s.r_minus).matrix;
    v.pol = PolarizationOperator(s.measure, s.basis).matrix;
    v.standard = StandardOperator(s.measure).matrix;
    v.eq72 = Eq72Literal(s.measure, s.initial_alpha);
    v.standard_vecs = EigenvectorStates(s.measure, kStandardDirection);
    v.eq73 = Eq73Literal(s.measure, 0.0);
    v.eq74 = Eq74Literal(s.measure, 0.0);
    v.eq55 = Eq55Literal(s.measure, s.basis, s.r_plus, s.r_minus);
    v.eq57 = Eq57Literal(s.measure, s.basis);
    v.eq58 = Eq58Literal(s.measure, s.basis);
    v.eq59 = Eq59Literal(s.measure, s.basis);
    v.eq60 = Eq60Literal(s.measure, s.basis);
    for (std::size_t i = 0; i < std::size(kProbes); ++i) {
      const auto [printed, value] = kProbes[i].eval(v);
      const double diff = std::abs(printed - value);
      if (n == 0 || diff > checks[i].max_abs_diff) {
        checks[i].max_abs_diff = diff;
        checks[i].paper_value = printed;
        checks[i].derived_value = value;
      }
    }
  }
  return checks;
}

std::vector<ErrataRecord> CollectErrata(const std::vector<EquationCheck>& checks,
                                        double tolerance) {
  std::vector<ErrataRecord> records;
  for (const EquationCheck& c : checks) {
    if (c.draws > 0 && c.max_abs_diff > tolerance) {
      records.push_back({c.equation, c.element, c.paper_value,
                         c.derived_value, c.max_abs_diff});
    }
  }
  return records;
}

}  // namespace genpol::errata
