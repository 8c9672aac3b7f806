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

#include <cmath>
#include <map>
#include <random>
#include <string>

#include "cli.h"
#include "json.hpp"
#include "qcool/circuit.h"
#include "qcool/cooling.h"
#include "qcool/matching.h"
#include "qcool/oracle.h"
#include "qcool/reducibility.h"
#include "qcool/sampling.h"

namespace qcool::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kAgreement = 1e-12;

Json describe(const MachineSpec& spec) {
  Json j;
  j["omega"] = spec.omega();
  j["gaps"] = spec.gaps();
  j["t_system"] = spec.t_system();
  j["t_machine"] = spec.t_machine();
  return j;
}

std::string join(const std::vector<BitString>& v) {
  std::string s;
  for (const auto& b : v) s += (s.empty() ? "" : " ") + b.str();
  return s;
}

}  // namespace

VerifyOutcome run_verify(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  SamplingOptions sampling;
  sampling.max_n = options.max_n;
  sampling.random_temperatures = options.random_temperatures;

  const std::vector<std::string> names = {
      "swappable_vs_sort",    "sort_vs_iterative", "delta_p0_vs_sort",
      "pipeline_vs_sort",     "circuit_vs_sort",   "bounds_below_optimum",
      "irreducible_vs_order", "hungarian_vs_brute_force"};
  std::map<std::string, std::pair<int, int>> tally;  // passed, failed
  for (const auto& n : names) tally[n] = {0, 0};
  Json mismatches = Json::array();

  auto record = [&](int trial, const MachineSpec& spec, const std::string& check,
                    bool ok, const std::string& detail) {
    auto& t = tally[check];
    (ok ? t.first : t.second)++;
    if (!ok && static_cast<int>(mismatches.size()) < options.max_report) {
      mismatches.push_back(
          {{"trial", trial}, {"check", check}, {"machine", describe(spec)}, {"detail", detail}});
    }
  };

  for (int trial = 0; trial < options.trials; ++trial) {
    const MachineSpec spec = sample_machine(rng, sampling);
    const SwappableSet s = swappable_set(spec);
    const PopulationVector pop = joint_populations(spec);
    const SortCoolResult sorted = sort_cool(pop);
    const SortCoolResult iter = sort_cool_iterative(pop);
    const CoolingReport report = delta_p0(spec);

    record(trial, spec, "swappable_vs_sort", sorted.swapped == s.members,
           "inequality {" + join(s.members) + "} vs sort {" + join(sorted.swapped) + "}");
    record(trial, spec, "sort_vs_iterative",
           iter.swapped == sorted.swapped &&
               std::abs(iter.p0_final - sorted.p0_final) <= kAgreement,
           "iterative p0 " + format_number(iter.p0_final) + " vs " +
               format_number(sorted.p0_final));
    record(trial, spec, "delta_p0_vs_sort",
           std::abs(report.p0_final - sorted.p0_final) <= kAgreement,
           "closed form " + format_number(report.p0_final) + " vs sort " +
               format_number(sorted.p0_final));
    const bool bounds_ok =
        report.bound_virtual <= report.delta_p0 + kAgreement &&
        report.bound_adaptive <= report.delta_p0 + kAgreement &&
        (!report.bound_fixed || *report.bound_fixed <= report.delta_p0 + kAgreement);
    record(trial, spec, "bounds_below_optimum", bounds_ok,
           "delta " + format_number(report.delta_p0) + ", virtual " +
               format_number(report.bound_virtual) + ", adaptive " +
               format_number(report.bound_adaptive));

    if (s.empty()) continue;
    const ReducibilityReport red = analyze_reducibility(spec);
    record(trial, spec, "irreducible_vs_order", red.irreducible == (red.order == 0),
           "irreducible " + std::string(red.irreducible ? "true" : "false") +
               ", order " + std::to_string(red.order));

    const auto matrix = cost_matrix(build_graph(spec), CostKind::kHamming, spec);
    const Matching matching = hungarian(matrix);
    const auto tlps = cooling_unitary(matrix, matching);
    const double piped = system_ground_population(apply_tlps(pop, tlps));
    record(trial, spec, "pipeline_vs_sort", std::abs(piped - sorted.p0_final) <= kAgreement,
           "pipeline " + format_number(piped) + " vs sort " + format_number(sorted.p0_final));

    if (spec.n() + 1 <= 12) {
      const Circuit circuit = lower_circuit(decompose_all(spec.n() + 1, tlps));
      const double simulated = system_ground_population(apply_circuit(pop, circuit));
      record(trial, spec, "circuit_vs_sort",
             std::abs(simulated - sorted.p0_final) <= kAgreement,
             "circuit " + format_number(simulated) + " vs sort " +
                 format_number(sorted.p0_final));
    }
    if (matrix.size() <= 6) {
      const double best = enumerate_optimal(matrix, 1).front().total;
      record(trial, spec, "hungarian_vs_brute_force",
             std::abs(best - matching.total) <= 1e-9,
             "hungarian " + format_number(matching.total) + " vs " + format_number(best));
    }
  }

  bool ok = true;
  Json checks = Json::object();
  for (const auto& n : names) {
    checks[n] = {{"passed", tally[n].first}, {"failed", tally[n].second}};
    ok = ok && tally[n].second == 0;
  }
  Json doc;
  doc["status"] = ok ? "ok" : "mismatch";
  doc["seed"] = options.seed;
  doc["trials"] = options.trials;
  doc["max_n"] = options.max_n;
  doc["random_temperatures"] = options.random_temperatures;
  doc["checks"] = checks;
  doc["mismatches"] = mismatches;
  return {doc.dump(2) + "\n", ok};
}

}  // namespace qcool::cli
