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

#include "genpol/cli.h"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <stdexcept>

#include "CLI11.hpp"
#include "genpol/amplitudes.h"
#include "genpol/format.h"
#include "genpol/operators.h"
#include "genpol/scenario.h"
#include "genpol/simulate.h"
#include "genpol/verify.h"

namespace genpol::cli {
namespace {

constexpr std::uint64_t kDefaultTrials = 100000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LabelArgs {
  double theta = 0.0;
  double alpha = 0.0;
  std::string branch = "+";
};

struct DirectionArgs {
  double theta = 0.0;
  double alpha = 0.0;
};

struct Options {
  bool machine = false;
  bool radians = false;
  std::optional<double> tolerance;

  LabelArgs from, to;
  DirectionArgs measure, basis;
  double r_plus = 1.0;
  double r_minus = -1.0;

  std::string scenario_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::size_t> stage_cap;
  unsigned threads = 0;
  bool exact = false;

  std::uint64_t draws = VerifyOptions{}.draws;

  AngleUnit unit() const {
    return radians ? AngleUnit::kRadians : AngleUnit::kDegrees;
  }
};

// Values for humans: the caller's unit, short precision.
std::string HumanAngle(double value, AngleUnit unit) {
  return FormatShort(value) + (unit == AngleUnit::kDegrees ? "deg" : "rad");
}

BranchLabel ToLabel(const LabelArgs& a, AngleUnit unit) {
  // Branch strings are validated during parsing.
  return {{ToRadians(a.theta, unit), ToRadians(a.alpha, unit)},
          *ParseBranch(a.branch)};
}

Direction ToDirection(const DirectionArgs& d, AngleUnit unit) {
  return {ToRadians(d.theta, unit), ToRadians(d.alpha, unit)};
}

std::string Describe(const LabelArgs& a, AngleUnit unit) {
  return "(" + HumanAngle(a.theta, unit) + ", " + HumanAngle(a.alpha, unit) +
         ", " + Symbol(*ParseBranch(a.branch)) + ")";
}

double ParseTolerance(const std::string& text, const char* origin) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size() && value > 0.0 && std::isfinite(value)) return value;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(origin) + ": invalid tolerance '" + text + "'");
}

std::size_t ParseStageCap(const std::string& text, const char* origin) {
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (used == text.size() && value >= 1) return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(origin) + ": invalid stage cap '" + text + "'");
}

// Flag, then environment, then scenario file, then default.
double ResolveTolerance(const Options& opt, const Environment& env,
                        std::optional<double> from_file = std::nullopt) {
  if (opt.tolerance) {
    if (!(*opt.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
    return *opt.tolerance;
  }
  if (env.tolerance) return ParseTolerance(*env.tolerance, "GENPOL_TOLERANCE");
  if (from_file) return *from_file;
  return kDefaultTolerance;
}

std::size_t ResolveStageCap(const Options& opt, const Environment& env) {
  if (opt.stage_cap) {
    if (*opt.stage_cap == 0) throw UsageError("--stage-cap must be at least 1");
    return *opt.stage_cap;
  }
  if (env.stage_cap) return ParseStageCap(*env.stage_cap, "GENPOL_STAGE_CAP");
  return kDefaultStageCap;
}

int CmdAmp(const Options& opt, std::ostream& out) {
  const AngleUnit unit = opt.unit();
  const Amplitude z =
      TransitionAmplitude(ToLabel(opt.from, unit), ToLabel(opt.to, unit));
  if (opt.machine) {
    out << "amplitude value=" << FormatComplex(z)
        << " re=" << FormatExact(z.real()) << " im=" << FormatExact(z.imag())
        << " abs2=" << FormatExact(std::norm(z)) << "\n";
    return kOk;
  }
  out << "chi" << Describe(opt.from, unit) << " -> " << Describe(opt.to, unit)
      << "\n"
      << "  amplitude  " << FormatComplex(z, false) << "\n"
      << "  re         " << FormatShort(z.real()) << "\n"
      << "  im         " << FormatShort(z.imag()) << "\n"
      << "  |chi|^2    " << FormatShort(std::norm(z)) << "\n";
  return kOk;
}

int CmdProb(const Options& opt, std::ostream& out) {
  const AngleUnit unit = opt.unit();
  const BranchLabel from = ToLabel(opt.from, unit);
  const BranchLabel to = ToLabel(opt.to, unit);
  const double p = Probability(from, to);
  const double closed = ProbabilityClosed(from, to);
  if (opt.machine) {
    out << "probability value=" << FormatExact(p)
        << " closed=" << FormatExact(closed)
        << " abs_diff=" << FormatExact(std::abs(p - closed)) << "\n";
    return kOk;
  }
  out << "P" << Describe(opt.from, unit) << " -> " << Describe(opt.to, unit)
      << "\n"
      << "  |chi|^2       " << FormatShort(p) << "\n"
      << "  closed form   " << FormatShort(closed) << "\n";
  return kOk;
}

void PrintEigenvectors(const Observable2& obs, const EigenStates& xi,
                       bool machine, std::ostream& out) {
  for (Branch b : kBranches) {
    const StateVector2& v = xi.For(b);
    const double value = b == Branch::Plus ? obs.r_plus : obs.r_minus;
    const StateVector2 rv = obs.matrix * v;
    const double residual = std::max(std::abs(rv.c_plus - value * v.c_plus),
                                     std::abs(rv.c_minus - value * v.c_minus));
    if (machine) {
      out << "eigvec branch=" << Symbol(b) << " eigenvalue=" << FormatExact(value)
          << " c_plus=" << FormatComplex(v.c_plus)
          << " c_minus=" << FormatComplex(v.c_minus)
          << " residual=" << FormatExact(residual) << "\n";
    } else {
      out << "  xi" << Symbol(b) << " (eigenvalue " << FormatShort(value)
          << ")  [" << FormatComplex(v.c_plus, false) << ", "
          << FormatComplex(v.c_minus, false) << "]  residual "
          << FormatShort(residual, 3) << "\n";
    }
  }
}

int CmdOperator(const Options& opt, std::ostream& out) {
  const AngleUnit unit = opt.unit();
  const Direction measure = ToDirection(opt.measure, unit);
  const Direction basis = ToDirection(opt.basis, unit);
  const Observable2 obs =
      ObservableMatrix(measure, basis, opt.r_plus, opt.r_minus);
  const EigenStates xi = EigenvectorStates(measure, basis);
  const Matrix2& m = obs.matrix;
  if (opt.machine) {
    out << "matrix m11=" << FormatComplex(m.m11)
        << " m12=" << FormatComplex(m.m12) << " m21=" << FormatComplex(m.m21)
        << " m22=" << FormatComplex(m.m22)
        << " r_plus=" << FormatExact(obs.r_plus)
        << " r_minus=" << FormatExact(obs.r_minus) << "\n";
    PrintEigenvectors(obs, xi, true, out);
    out << "invariants residual=" << FormatExact(obs.InvariantResidual())
        << "\n";
    return kOk;
  }
  out << "observable measured along (" << HumanAngle(opt.measure.theta, unit)
      << ", " << HumanAngle(opt.measure.alpha, unit) << "), basis ("
      << HumanAngle(opt.basis.theta, unit) << ", "
      << HumanAngle(opt.basis.alpha, unit) << "), values ("
      << FormatShort(obs.r_plus) << ", " << FormatShort(obs.r_minus) << ")\n"
      << "  [ " << FormatComplex(m.m11, false) << "   "
      << FormatComplex(m.m12, false) << " ]\n"
      << "  [ " << FormatComplex(m.m21, false) << "   "
      << FormatComplex(m.m22, false) << " ]\n";
  PrintEigenvectors(obs, xi, false, out);
  out << "  invariant residual " << FormatShort(obs.InvariantResidual(), 3)
      << "\n";
  return kOk;
}

int CmdEigvec(const Options& opt, std::ostream& out) {
  const AngleUnit unit = opt.unit();
  const Direction measure = ToDirection(opt.measure, unit);
  const Direction basis = ToDirection(opt.basis, unit);
  PrintEigenvectors(PolarizationOperator(measure, basis),
                    EigenvectorStates(measure, basis), opt.machine, out);
  return kOk;
}

int CmdExpect(const Options& opt, const Environment& env, std::ostream& out) {
  const AngleUnit unit = opt.unit();
  const BranchLabel initial = ToLabel(opt.from, unit);
  const Direction measure = ToDirection(opt.measure, unit);
  const Direction basis = ToDirection(opt.basis, unit);
  const double tolerance = ResolveTolerance(opt, env);
  const double by_matrix = Expectation(StateVector(initial, basis),
                                       PolarizationOperator(measure, basis),
                                       tolerance);
  const double closed = ExpectationClosed(initial, measure);
  if (opt.machine) {
    out << "expectation value=" << FormatExact(by_matrix)
        << " closed=" << FormatExact(closed)
        << " abs_diff=" << FormatExact(std::abs(by_matrix - closed)) << "\n";
    return kOk;
  }
  out << "<p> for " << Describe(opt.from, unit) << " measured along ("
      << HumanAngle(opt.measure.theta, unit) << ", "
      << HumanAngle(opt.measure.alpha, unit) << ")\n"
      << "  matrix route   " << FormatShort(by_matrix) << "\n"
      << "  closed form    " << FormatShort(closed) << "\n";
  return kOk;
}

int CmdSimulate(const Options& opt, const Environment& env, std::ostream& out,
                std::ostream& err) {
  ScenarioFile file;
  try {
    file = LoadScenario(opt.scenario_path);
  } catch (const ScenarioFileError& e) {
    err << "error: " << e.what() << "\n";
    return kFileError;
  }
  const double tolerance = ResolveTolerance(opt, env, file.tolerance);
  SampleOptions sample_options;
  sample_options.stage_cap = ResolveStageCap(opt, env);
  sample_options.threads = opt.threads;
  const std::uint64_t seed = opt.seed.value_or(file.seed.value_or(0));
  const std::uint64_t trials =
      opt.trials.value_or(file.trials.value_or(kDefaultTrials));
  if (!opt.exact && trials == 0) throw UsageError("--trials must be at least 1");

  OutcomeDistribution exact;
  std::optional<SampleReport> report;
  try {
    exact = ExactDistribution(file.scenario, sample_options.stage_cap);
    if (!opt.exact) {
      report = Sample(file.scenario, seed, trials, sample_options);
    }
  } catch (const ScenarioError& e) {
    err << "error: " << opt.scenario_path << ": " << e.what() << "\n";
    return kFileError;
  }

  const std::size_t n = exact.stages;
  const double total = exact.Total();
  if (opt.machine) {
    out << "scenario stages=" << n << " stage_cap=" << sample_options.stage_cap;
    if (report) out << " seed=" << seed << " trials=" << trials;
    out << "\n";
    for (std::size_t i = 0; i < exact.probabilities.size(); ++i) {
      out << "sequence outcome=" << SequenceLabel(i, n)
          << " probability=" << FormatExact(exact.probabilities[i]);
      if (report) {
        out << " count=" << report->counts[i] << " frequency="
            << FormatExact(static_cast<double>(report->counts[i]) /
                           static_cast<double>(trials))
            << " deviation_sigma=" << FormatExact(report->deviation_sigma[i]);
      }
      out << "\n";
    }
    out << "summary total_probability=" << FormatExact(total);
    if (report) {
      out << " max_abs_deviation_sigma="
          << FormatExact(report->max_abs_deviation_sigma);
    }
    out << "\n";
  } else {
    out << "analyzer chain with " << n << " stage" << (n == 1 ? "" : "s");
    if (report) out << ", " << trials << " trials, seed " << seed;
    out << "\n";
    out << std::left << std::setw(std::max<int>(8, static_cast<int>(n) + 2))
        << "outcome" << std::setw(22) << "probability";
    if (report) out << std::setw(12) << "count" << std::setw(14) << "frequency" << "sigma";
    out << "\n";
    for (std::size_t i = 0; i < exact.probabilities.size(); ++i) {
      out << std::setw(std::max<int>(8, static_cast<int>(n) + 2))
          << SequenceLabel(i, n) << std::setw(22)
          << FormatShort(exact.probabilities[i], 12);
      if (report) {
        out << std::setw(12) << report->counts[i] << std::setw(14)
            << FormatShort(static_cast<double>(report->counts[i]) /
                               static_cast<double>(trials),
                           8)
            << FormatShort(report->deviation_sigma[i], 3);
      }
      out << "\n";
    }
    out << "total probability " << FormatShort(total, 17);
    if (report) {
      out << ", max deviation " << FormatShort(report->max_abs_deviation_sigma, 3)
          << " sigma";
    }
    out << "\n";
  }
  if (!(std::abs(total - 1.0) <= tolerance)) {
    err << "error: outcome probabilities sum to " << FormatExact(total) << "\n";
    return kInvariantFailure;
  }
  return kOk;
}

const char* RouteName(errata::Route route) {
  return route == errata::Route::kPrinted ? "printed" : "closed_matrix";
}

int CmdVerify(const Options& opt, const Environment& env, std::ostream& out) {
  VerifyOptions vo;
  vo.draws = opt.draws;
  vo.tolerance = ResolveTolerance(opt, env);
  vo.seed = opt.seed.value_or(0);
  const VerifyReport report = RunVerify(vo);

  std::uint64_t checks = 0;
  for (const SuiteResult& s : report.suites) checks += s.checks;
  const bool ok = report.AllPassed();

  if (opt.machine) {
    for (const SuiteResult& s : report.suites) {
      out << "suite name=" << s.name << " checks=" << s.checks
          << " max_residual=" << FormatExact(s.max_residual)
          << " tolerance=" << FormatExact(s.tolerance)
          << " status=" << (s.passed ? "pass" : "fail") << "\n";
    }
    for (const errata::EquationCheck& c : report.transcriptions) {
      out << "transcription equation=" << c.equation << " element=" << c.element
          << " route=" << RouteName(c.route) << " draws=" << c.draws
          << " max_abs_diff=" << FormatExact(c.max_abs_diff) << "\n";
    }
    for (const errata::ErrataRecord& r : report.errata) {
      out << "errata equation=" << r.equation << " element=" << r.element
          << " paper_value=" << FormatComplex(r.paper_value)
          << " derived_value=" << FormatComplex(r.derived_value)
          << " max_abs_diff=" << FormatExact(r.max_abs_diff) << "\n";
    }
    out << "summary status=" << (ok ? "pass" : "fail")
        << " draws=" << vo.draws << " seed=" << vo.seed
        << " suites=" << report.suites.size() << " checks=" << checks
        << " errata=" << report.errata.size() << "\n";
  } else {
    out << "invariant suites (" << vo.draws << " draws, seed " << vo.seed
        << ", tolerance " << FormatShort(vo.tolerance, 3) << ")\n";
    for (const SuiteResult& s : report.suites) {
      out << "  " << (s.passed ? "pass " : "FAIL ") << std::left
          << std::setw(26) << s.name << std::right << std::setw(9) << s.checks
          << " checks  max residual " << FormatShort(s.max_residual, 3)
          << "\n";
    }
    out << "transcribed closed forms (max |printed - derived|)\n";
    for (const errata::EquationCheck& c : report.transcriptions) {
      out << "  " << std::left << std::setw(6) << c.equation << std::setw(8)
          << c.element << std::setw(14) << RouteName(c.route)
          << FormatShort(c.max_abs_diff, 3) << "\n";
    }
    out << std::right;
    if (report.errata.empty()) {
      out << "no errata\n";
    } else {
      out << "errata (" << report.errata.size() << ")\n";
      for (const errata::ErrataRecord& r : report.errata) {
        out << "  " << r.equation << " " << r.element << ": printed "
            << FormatComplex(r.paper_value, false) << ", derived "
            << FormatComplex(r.derived_value, false) << ", max diff "
            << FormatShort(r.max_abs_diff, 3) << "\n";
      }
    }
    out << (ok ? "all invariants pass" : "invariant failures detected") << "\n";
  }
  return ok ? kOk : kInvariantFailure;
}

void AddLabel(CLI::App* app, LabelArgs& label, const std::string& suffix) {
  app->add_option("theta_" + suffix, label.theta, "polarization angle")
      ->required();
  app->add_option("alpha_" + suffix, label.alpha, "relative phase")->required();
  app->add_option("branch_" + suffix, label.branch, "+ (parallel) or - (perpendicular)")
      ->required()
      ->check([](const std::string& s) {
        return ParseBranch(s) ? std::string() : "branch must be + or -";
      });
}

void AddDirection(CLI::App* app, DirectionArgs& dir, const std::string& suffix,
                  bool required) {
  auto* theta = app->add_option("theta_" + suffix, dir.theta, "angle");
  auto* alpha = app->add_option("alpha_" + suffix, dir.alpha, "relative phase");
  if (required) {
    theta->required();
    alpha->required();
  }
}

}  // namespace

double ToRadians(double value, AngleUnit unit) {
  return unit == AngleUnit::kDegrees ? DegreesToRadians(value) : value;
}

Environment Environment::FromProcess() {
  Environment env;
  if (const char* v = std::getenv("GENPOL_TOLERANCE")) env.tolerance = v;
  if (const char* v = std::getenv("GENPOL_STAGE_CAP")) env.stage_cap = v;
  return env;
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err, const Environment& env) {
  Options opt;
  CLI::App app{"Generalized polarization amplitudes, operators and analyzer "
               "chains",
               "genpol"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--machine", opt.machine,
               "one key=value record per line, 17 significant digits");
  auto* deg = app.add_flag("--deg", "angles in degrees (default)");
  auto* rad = app.add_flag("--rad", opt.radians, "angles in radians");
  deg->excludes(rad);
  app.add_option("--tolerance", opt.tolerance,
                 "invariant tolerance (env GENPOL_TOLERANCE; default 1e-12)");

  auto* amp = app.add_subcommand("amp", "transition amplitude chi(a, b)");
  AddLabel(amp, opt.from, "a");
  AddLabel(amp, opt.to, "b");

  auto* prob = app.add_subcommand("prob", "transition probability |chi(a, b)|^2");
  AddLabel(prob, opt.from, "a");
  AddLabel(prob, opt.to, "b");

  auto* op = app.add_subcommand(
      "operator", "observable matrix along b in the basis of c, eigenvectors");
  AddDirection(op, opt.measure, "b", true);
  AddDirection(op, opt.basis, "c", true);
  op->add_option("r_plus", opt.r_plus, "value for the parallel outcome (+1)");
  op->add_option("r_minus", opt.r_minus, "value for the perpendicular outcome (-1)");

  auto* eig = app.add_subcommand(
      "eigvec", "eigenvectors of the polarization operator along b, basis c");
  AddDirection(eig, opt.measure, "b", true);
  AddDirection(eig, opt.basis, "c", true);

  auto* expect = app.add_subcommand(
      "expect", "expectation of the polarization observable along b");
  AddLabel(expect, opt.from, "a");
  AddDirection(expect, opt.measure, "b", true);
  expect->add_option("--basis-theta", opt.basis.theta,
                     "basis angle used by the matrix route (0)");
  expect->add_option("--basis-alpha", opt.basis.alpha,
                     "basis phase used by the matrix route (0)");

  auto* sim = app.add_subcommand("simulate", "analyzer chain from a scenario file");
  sim->add_option("scenario", opt.scenario_path, "JSON scenario file")->required();
  sim->add_option("--seed", opt.seed, "random seed (file value, else 0)");
  sim->add_option("--trials", opt.trials, "Monte Carlo trials (file value, else 100000)");
  sim->add_flag("--exact", opt.exact, "exact distribution only, no sampling");
  sim->add_option("--stage-cap", opt.stage_cap,
                  "maximum number of stages (env GENPOL_STAGE_CAP; default 20)");
  sim->add_option("--threads", opt.threads, "worker threads (0 = hardware)");

  auto* verify = app.add_subcommand("verify", "randomized invariant suites and errata");
  verify->add_option("--draws", opt.draws, "random parameter draws per suite");
  verify->add_option("--seed", opt.seed, "random seed (0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*amp) return CmdAmp(opt, out);
    if (*prob) return CmdProb(opt, out);
    if (*op) return CmdOperator(opt, out);
    if (*eig) return CmdEigvec(opt, out);
    if (*expect) return CmdExpect(opt, env, out);
    if (*sim) return CmdSimulate(opt, env, out, err);
    if (*verify) return CmdVerify(opt, env, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const NotNormalizedError& e) {
    err << "error: " << e.what() << "\n";
    return kInvariantFailure;
  }
  return kUsageError;
}

}  // namespace genpol::cli
