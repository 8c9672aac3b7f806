// Copyright 2026 The qcool Authors
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

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qcool/errors.h"
#include "qcool/machine.h"

namespace qcool {
namespace {

using nlohmann::json;

double number_field(const json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) throw ValidationError(field, "missing");
  if (!it->is_number()) throw ValidationError(field, "must be a number");
  return it->get<double>();
}

double optional_number(const json& doc, const char* field, double fallback) {
  return doc.contains(field) ? number_field(doc, field) : fallback;
}

}  // namespace

MachineSpec load_machine(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ValidationError("machine",
                          std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("machine", "document must be a JSON object");
  }

  MachineSpec::Options options;
  options.t_system = optional_number(doc, "t_system", 1.0);
  options.t_machine = optional_number(doc, "t_machine", 1.0);
  options.tolerance = optional_number(doc, "tolerance", kDefaultTolerance);
  const double omega = number_field(doc, "omega");

  if (doc.contains("family")) {
    if (!doc["family"].is_string()) {
      throw ValidationError("family", "must be a string");
    }
    const GapFamily family = parse_gap_family(doc["family"].get<std::string>());
    if (family == GapFamily::kExplicit) {
      throw ValidationError("family", "use \"gaps\" for explicit machines");
    }
    const auto n_it = doc.find("n");
    if (n_it == doc.end()) throw ValidationError("n", "missing");
    if (!n_it->is_number_integer()) {
      throw ValidationError("n", "must be an integer");
    }
    const auto n = n_it->get<long long>();
    if (n < 1 || n > kMaxMachineQubits) {
      throw ValidationError("n", "must be in [1, " +
                                     std::to_string(kMaxMachineQubits) + "]");
    }
    return MachineSpec::from_family(family, number_field(doc, "gamma"),
                                    static_cast<int>(n), omega, options);
  }

  const auto gaps_it = doc.find("gaps");
  if (gaps_it == doc.end()) {
    throw ValidationError("gaps", "missing (or give a \"family\" shorthand)");
  }
  if (!gaps_it->is_array()) throw ValidationError("gaps", "must be an array");
  std::vector<double> gaps;
  for (const auto& g : *gaps_it) {
    if (!g.is_number()) throw ValidationError("gaps", "entries must be numbers");
    gaps.push_back(g.get<double>());
  }
  return MachineSpec(omega, std::move(gaps), options);
}

MachineSpec load_machine_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("machine", "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_machine(buffer.str());
}

}  // namespace qcool
