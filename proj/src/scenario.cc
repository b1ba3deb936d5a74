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

#include "genpol/scenario.h"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace genpol {
namespace {

using json = nlohmann::json;

[[noreturn]] void Fail(std::string_view source, const std::string& where,
                       const std::string& what) {
  throw ScenarioFileError(std::string(source) + ": " + where + ": " + what);
}

void RejectUnknownKeys(const json& object, std::string_view source,
                       const std::string& where,
                       std::initializer_list<std::string_view> allowed) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (std::string_view key : allowed) known = known || item.key() == key;
    if (!known) Fail(source, where + "/" + item.key(), "unknown key");
  }
}

const json& RequireObject(const json& value, std::string_view source,
                          const std::string& where) {
  if (!value.is_object()) Fail(source, where, "expected an object");
  return value;
}

double ReadAngle(const json& object, const char* key, bool required,
                 std::string_view source, const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) {
    if (required) Fail(source, where + "/" + key, "missing required key");
    return 0.0;
  }
  if (!it->is_number()) Fail(source, where + "/" + key, "expected a number");
  const double value = it->get<double>();
  if (!std::isfinite(value)) Fail(source, where + "/" + key, "not finite");
  return value;
}

Direction ReadDirection(const json& object, std::string_view source,
                        const std::string& where) {
  return {DegreesToRadians(ReadAngle(object, "theta_deg", true, source, where)),
          DegreesToRadians(ReadAngle(object, "alpha_deg", false, source, where))};
}

std::uint64_t ReadCount(const json& value, std::string_view source,
                        const std::string& where) {
  if (!value.is_number_unsigned()) {
    Fail(source, where, "expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

}  // namespace

std::optional<Branch> ParseBranch(std::string_view text) {
  if (text == "+" || text == "plus" || text == "p") return Branch::Plus;
  if (text == "-" || text == "minus" || text == "m" || text == "−") {
    return Branch::Minus;
  }
  return std::nullopt;
}

ScenarioFile ParseScenario(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(source, "syntax", e.what());
  }
  RequireObject(doc, source, "");
  RejectUnknownKeys(doc, source, "",
                    {"initial", "stages", "seed", "trials", "tolerance"});

  ScenarioFile out;
  const auto initial = doc.find("initial");
  if (initial == doc.end()) Fail(source, "/initial", "missing required key");
  RequireObject(*initial, source, "/initial");
  RejectUnknownKeys(*initial, source, "/initial",
                    {"theta_deg", "alpha_deg", "branch"});
  out.scenario.initial.direction = ReadDirection(*initial, source, "/initial");
  const auto branch = initial->find("branch");
  if (branch == initial->end()) {
    Fail(source, "/initial/branch", "missing required key");
  }
  if (!branch->is_string()) Fail(source, "/initial/branch", "expected a string");
  const auto parsed = ParseBranch(branch->get<std::string>());
  if (!parsed) {
    Fail(source, "/initial/branch",
         "expected \"+\" or \"-\", got \"" + branch->get<std::string>() + "\"");
  }
  out.scenario.initial.branch = *parsed;

  const auto stages = doc.find("stages");
  if (stages == doc.end()) Fail(source, "/stages", "missing required key");
  if (!stages->is_array()) Fail(source, "/stages", "expected an array");
  if (stages->empty()) Fail(source, "/stages", "at least one stage required");
  for (std::size_t k = 0; k < stages->size(); ++k) {
    const std::string where = "/stages/" + std::to_string(k);
    const json& stage = RequireObject((*stages)[k], source, where);
    RejectUnknownKeys(stage, source, where, {"theta_deg", "alpha_deg"});
    out.scenario.stages.push_back(ReadDirection(stage, source, where));
  }

  if (const auto it = doc.find("seed"); it != doc.end()) {
    out.seed = ReadCount(*it, source, "/seed");
  }
  if (const auto it = doc.find("trials"); it != doc.end()) {
    out.trials = ReadCount(*it, source, "/trials");
  }
  if (const auto it = doc.find("tolerance"); it != doc.end()) {
    if (!it->is_number() || !(it->get<double>() > 0.0)) {
      Fail(source, "/tolerance", "expected a positive number");
    }
    out.tolerance = it->get<double>();
  }
  return out;
}

ScenarioFile LoadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioFileError(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseScenario(text.str(), path);
}

}  // namespace genpol
