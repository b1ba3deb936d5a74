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

// Acceptance run. Prints one [PASS] or [FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "genpol/amplitudes.h"
#include "genpol/cli.h"
#include "genpol/errata.h"
#include "genpol/limits.h"
#include "genpol/operators.h"
#include "genpol/rng.h"
#include "genpol/simulate.h"
#include "genpol/verify.h"

namespace genpol {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTight = 1e-12;
constexpr double kTriangle = 1e-10;
constexpr std::uint64_t kDraws = 100000;
constexpr std::uint64_t kSeed = 20261018;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Draws {
 public:
  explicit Draws(std::uint64_t stream) : rng_(kSeed, stream) {}
  double Angle() { return rng_.Uniform(-2 * kPi, 2 * kPi); }
  double Value() { return rng_.Uniform(-5.0, 5.0); }
  Direction Dir() { return {Angle(), Angle()}; }
  Branch Br() { return rng_.Uniform() < 0.5 ? Branch::Plus : Branch::Minus; }

 private:
  RandomStream rng_;
};

int failures = 0;

void Report(const char* id, bool ok, const std::string& detail) {
  std::printf("[%s] %s %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  if (!ok) ++failures;
}

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double Diff(Complex a, Complex b) { return std::abs(a - b); }

// Largest residual after matching v to u up to a global phase.
double PhaseAlignedDiff(const StateVector2& u, const StateVector2& v) {
  const Complex overlap = Inner(v, u);
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
  return MaxAbsDiff(u, {phase * v.c_plus, phase * v.c_minus});
}

void Ac1() {
  Draws d(1);
  const auto start = Clock::now();
  double worst = 0;
  std::uint64_t checks = 0;
  for (std::uint64_t n = 0; n < kDraws; ++n) {
    const Direction a = d.Dir(), b = d.Dir();
    for (Branch ba : kBranches) {
      for (Branch bb : kBranches) {
        worst = std::max(worst, Diff(TransitionAmplitude({a, ba}, {b, bb}),
                                     oracle::InnerProductAmplitude({a, ba}, {b, bb})));
        ++checks;
      }
    }
  }
  const double t = Seconds(start);
  Report("AC1", worst < kTight && t < 5.0,
         Fmt("amplitude vs inner product: %llu checks, max |diff| %.3g (< 1e-12), "
             "%.2f s (< 5 s)",
             static_cast<unsigned long long>(checks), worst, t));
}

void Ac2() {
  Draws d(2);
  double worst = 0;
  for (std::uint64_t n = 0; n < kDraws; ++n) {
    const BranchLabel from{d.Dir(), d.Br()}, to{d.Dir(), d.Br()};
    const Direction via = d.Dir();
    worst = std::max(worst, Diff(Chain(from, to, via), TransitionAmplitude(from, to)));
  }
  Report("AC2", worst < kTight,
         Fmt("chaining through a random direction: %llu draws, max |diff| %.3g (< 1e-12)",
             static_cast<unsigned long long>(kDraws), worst));
}

void Ac3() {
  Draws d(3);
  double herm = 0, ortho = 0, norm = 0;
  for (std::uint64_t n = 0; n < kDraws; ++n) {
    const BranchLabel a{d.Dir(), d.Br()}, b{d.Dir(), d.Br()};
    herm = std::max(herm, Diff(TransitionAmplitude(b, a),
                               std::conj(TransitionAmplitude(a, b))));
    const Direction x = d.Dir();
    for (Branch s : kBranches) {
      for (Branch t : kBranches) {
        const double expected = s == t ? 1.0 : 0.0;
        const double r = Diff(TransitionAmplitude({x, s}, {x, t}), expected);
        (s == t ? norm : ortho) = std::max(s == t ? norm : ortho, r);
      }
    }
  }
  Report("AC3", herm < kTight && ortho < kTight && norm < kTight,
         Fmt("hermiticity %.3g, orthogonality %.3g, normalization %.3g over %llu "
             "draws (< 1e-12)",
             herm, ortho, norm, static_cast<unsigned long long>(kDraws)));
}

void Ac4() {
  Draws d(4);
  double worst = 0;
  std::uint64_t unequal = 0;
  for (std::uint64_t n = 0; n < kDraws; ++n) {
    const Direction a = d.Dir(), b = d.Dir();
    double closed[2][2];
    for (Branch s : kBranches) {
      for (Branch t : kBranches) {
        const double exact = std::norm(TransitionAmplitude({a, s}, {b, t}));
        closed[Index(s)][Index(t)] = ProbabilityClosed({a, s}, {b, t});
        worst = std::max(worst, std::abs(closed[Index(s)][Index(t)] - exact));
        worst = std::max(worst, std::abs(Probability({a, s}, {b, t}) - exact));
      }
    }
    // Same-branch and cross-branch pairs share one closed expression.
    if (closed[0][0] != closed[1][1] || closed[0][1] != closed[1][0]) ++unequal;
  }
  Report("AC4", worst < kTight && unequal == 0,
         Fmt("closed-form probabilities: max |diff| %.3g (< 1e-12); "
             "P(++) == P(--) and P(+-) == P(-+) bitwise in %llu/%llu draws",
             worst, static_cast<unsigned long long>(kDraws - unequal),
             static_cast<unsigned long long>(kDraws)));
}

void Ac5() {
  Draws d(5);
  constexpr std::uint64_t kTriangleDraws = 20000;
  double triangle = 0, closed = 0;
  std::uint64_t eigen_checks = 0;
  for (std::uint64_t n = 0; n < kTriangleDraws; ++n) {
    const Direction b = d.Dir(), c = d.Dir();
    double rp = d.Value(), rm = d.Value();
    if (std::abs(rp - rm) < 0.5) rm = rp - 0.5 - std::abs(rm);
    const Matrix2 product = ObservableMatrix(b, c, rp, rm).matrix;
    const Matrix2 spectral = oracle::SpectralMatrix(b, c, rp, rm);
    const Matrix2 trig = ObservableMatrixClosed(b, c, rp, rm).matrix;

    const auto pairs = oracle::SolveHermitian(product);
    Matrix2 rebuilt{0.0, 0.0, 0.0, 0.0};
    for (const auto& p : pairs) rebuilt = rebuilt + p.value * Outer(p.vector);
    const EigenStates xi = EigenvectorStates(b, c);
    const bool plus_first = rp > rm;
    const StateVector2& top = plus_first ? xi.plus : xi.minus;
    const StateVector2& bottom = plus_first ? xi.minus : xi.plus;

    triangle = std::max({triangle, MaxAbsDiff(product, spectral),
                         MaxAbsDiff(product, rebuilt), MaxAbsDiff(spectral, rebuilt),
                         std::abs(pairs[0].value - std::max(rp, rm)),
                         std::abs(pairs[1].value - std::min(rp, rm)),
                         PhaseAlignedDiff(pairs[0].vector, top),
                         PhaseAlignedDiff(pairs[1].vector, bottom)});
    eigen_checks += 2;
    closed = std::max({closed, MaxAbsDiff(trig, product), MaxAbsDiff(trig, spectral),
                       MaxAbsDiff(trig, rebuilt)});
  }
  Report("AC5", triangle < kTriangle && closed < kTight,
         Fmt("product/spectral/eigensolver triangle over %llu draws: max %.3g "
             "(< 1e-10); closed-form elements vs all three: max %.3g (< 1e-12)",
             static_cast<unsigned long long>(kTriangleDraws), triangle, closed));
}

void Ac6() {
  Draws d(6);
  double eig = 0, square = 0;
  for (std::uint64_t n = 0; n < kDraws; ++n) {
    const Direction b = d.Dir(), c = d.Dir();
    const Matrix2 p = PolarizationOperator(b, c).matrix;
    const EigenStates xi = EigenvectorStates(b, c);
    for (Branch br : kBranches) {
      const StateVector2& v = xi.For(br);
      const StateVector2 pv = p * v;
      eig = std::max(eig, MaxAbsDiff(pv, {Sign(br) * v.c_plus, Sign(br) * v.c_minus}));
    }
    square = std::max(square, MaxAbsDiff(p * p, Matrix2::Identity()));
  }
  Report("AC6", eig < kTight && square < kTight,
         Fmt("eigenvalue equation max %.3g, |p^2 - I| max %.3g over %llu draws "
             "(< 1e-12)",
             eig, square, static_cast<unsigned long long>(kDraws)));
}

void Ac7() {
  Draws d(7);
  double worst = 0;
  for (std::uint64_t n = 0; n < kDraws; ++n) {
    const BranchLabel a{d.Dir(), d.Br()};
    const Direction measure = d.Dir(), basis = d.Dir();
    const double by_matrix =
        Expectation(StateVector(a, basis), PolarizationOperator(measure, basis));
    const double by_probability =
        Probability(a, {measure, Branch::Plus}) - Probability(a, {measure, Branch::Minus});
    worst = std::max({worst, std::abs(by_matrix - by_probability),
                      std::abs(by_matrix - ExpectationClosed(a, measure))});
  }
  Report("AC7", worst < kTight,
         Fmt("matrix route vs probability route over %llu random bases: "
             "max |diff| %.3g (< 1e-12)",
             static_cast<unsigned long long>(kDraws), worst));
}

void Ac8() {
  Draws d(8);
  double amps = 0, states = 0, op = 0, xi_diff = 0;
  for (std::uint64_t n = 0; n < kDraws; ++n) {
    const Direction a = d.Dir();
    const double ct = std::cos(a.theta), st = std::sin(a.theta);
    const Complex e = std::polar(1.0, a.alpha);
    const StandardAmplitudes s = StandardAmplitudesFor(a);
    const Direction z = kStandardDirection;
    amps = std::max({amps, Diff(s.parallel_plus, ct), Diff(s.parallel_minus, st * e),
                     Diff(s.perpendicular_plus, -st), Diff(s.perpendicular_minus, ct * e),
                     Diff(TransitionAmplitude({a, Branch::Plus}, {z, Branch::Minus}),
                          st * e)});
    const StandardStates ss = StandardStatesFor(a);
    states = std::max({states, MaxAbsDiff(ss.plus, {ct, st * e}),
                       MaxAbsDiff(ss.minus, {-st, ct * e})});

    const Direction b = d.Dir();
    const Matrix2 p = StandardOperator(b).matrix;
    const double c2 = std::cos(2 * b.theta), s2 = std::sin(2 * b.theta);
    const Matrix2 textbook{c2, s2 * std::polar(1.0, -b.alpha),
                           s2 * std::polar(1.0, b.alpha), -c2};
    op = std::max({op, MaxAbsDiff(p, textbook), std::abs(p.Trace()),
                   MaxAbsDiff(p * p, Matrix2::Identity())});
    // Printed eigenvectors keep a basis phase; at alpha_c = 0 they must match.
    const EigenStates xi = EigenvectorStates(b, z);
    xi_diff = std::max({xi_diff, MaxAbsDiff(errata::Eq73Literal(b, 0.0), xi.plus),
                        MaxAbsDiff(errata::Eq74Literal(b, 0.0), xi.minus)});
  }
  // The alpha_c discrepancy is real: nonzero basis phase moves the printed form.
  const double phase_gap = MaxAbsDiff(errata::Eq73Literal({0.4, 0.3}, 0.7),
                                      EigenvectorStates({0.4, 0.3}, kStandardDirection).plus);
  Report("AC8",
         amps < kTight && states < kTight && op < kTight && xi_diff < kTight &&
             phase_gap > kTight,
         Fmt("standard amplitudes %.3g, states %.3g, operator/trace/involution %.3g, "
             "eigenvectors at alpha_c=0 %.3g (< 1e-12); alpha_c=0.7 gap %.3g",
             amps, states, op, xi_diff, phase_gap));
}

using Fields = std::map<std::string, std::string>;

std::vector<Fields> Records(const std::string& text, const std::string& prefix) {
  std::vector<Fields> found;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(prefix + " ", 0) != 0) continue;
    Fields f;
    std::istringstream words(line.substr(prefix.size()));
    std::string w;
    while (words >> w) {
      const auto eq = w.find('=');
      if (eq != std::string::npos) f[w.substr(0, eq)] = w.substr(eq + 1);
    }
    found.push_back(std::move(f));
  }
  return found;
}

void Ac9() {
  // Runs the verify command exactly as a user would.
  const char* argv[] = {"genpol", "--machine", "verify", "--seed", "20261018"};
  std::ostringstream out, err;
  const int code = cli::Run(5, argv, out, err, {});

  double closed_worst = 0;
  int closed_seen = 0;
  for (const Fields& f : Records(out.str(), "transcription")) {
    if (f.at("route") != "closed_matrix") continue;
    ++closed_seen;
    closed_worst = std::max(closed_worst, std::stod(f.at("max_abs_diff")));
  }
  std::map<std::string, double> flagged;
  for (const Fields& f : Records(out.str(), "errata")) {
    const std::string key = f.at("equation") + ":" + f.at("element");
    flagged[key] = std::stod(f.at("max_abs_diff"));
  }
  const bool group_flagged = flagged.count("Eq58:p12") && flagged.count("Eq59:p21") &&
                             flagged.count("Eq72:m12") && flagged.count("Eq72:m21");
  const bool eq57_clean = !flagged.count("Eq57:p11");
  double smallest = 1e300;
  for (const auto& [key, diff] : flagged) smallest = std::min(smallest, diff);

  Report("AC9",
         code == cli::kOk && closed_seen == 4 && closed_worst < kTight && group_flagged,
         Fmt("verify flags %zu printed elements (smallest max diff %.3g); "
             "Eq53-56 closed-matrix route max diff %.3g (< 1e-12)",
             flagged.size(), flagged.empty() ? 0.0 : smallest, closed_worst));
  std::printf("       note: printed Eq57 %s; printed Eq55 R21 %s\n",
              eq57_clean ? "agrees with the derivation" : "is flagged",
              flagged.count("Eq55:R21") ? "repeats R12 and is flagged" : "is not flagged");
}

void Ac10() {
  const auto start = Clock::now();
  const MeasurementScenario malus{{{0.0, 0.0}, Branch::Plus},
                                  {{kPi / 4, 0.0}, {kPi / 2, 0.0}}};
  const OutcomeDistribution exact = ExactDistribution(malus);
  const double c = std::cos(kPi / 4);
  const double closed = (c * c) * (c * c);
  const double exact_gap = std::abs(exact.probabilities[0] - closed);

  constexpr std::uint64_t kTrials = 1000000;
  const SampleReport first = Sample(malus, kSeed, kTrials);
  const SampleReport second = Sample(malus, kSeed, kTrials);
  double worst_sigma = 0;
  for (std::size_t i = 0; i < first.counts.size(); ++i) {
    const double p = exact.probabilities[i];
    const double sigma = std::sqrt(p * (1 - p) / kTrials);
    const double freq = static_cast<double>(first.counts[i]) / kTrials;
    worst_sigma = std::max(worst_sigma, std::abs(freq - p) / sigma);
  }
  const double t = Seconds(start);
  Report("AC10",
         exact_gap <= 1e-15 && std::abs(closed - 0.25) <= 1e-15 && worst_sigma <= 5.0 &&
             first == second && t < 10.0,
         Fmt("Malus (++) exact %.17g (|diff| %.3g <= 1e-15); 1e6 trials max "
             "deviation %.3f sigma (<= 5); repeat identical: %s; %.2f s (< 10 s)",
             exact.probabilities[0], exact_gap, worst_sigma,
             first == second ? "yes" : "no", t));
}

}  // namespace
}  // namespace genpol

int main() {
  using namespace genpol;
  Ac1();
  Ac2();
  Ac3();
  Ac4();
  Ac5();
  Ac6();
  Ac7();
  Ac8();
  Ac9();
  Ac10();
  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
