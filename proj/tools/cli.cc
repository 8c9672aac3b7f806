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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcool/circuit.h"
#include "qcool/cooling.h"
#include "qcool/errors.h"
#include "qcool/matching.h"
#include "qcool/orders.h"
#include "qcool/reducibility.h"

namespace qcool::cli {
namespace {

using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits so the JSON text is stable.
double rounded(double v) { return std::stod(format_number(v)); }

Json strings(const std::vector<BitString>& v) {
  Json out = Json::array();
  for (const auto& b : v) out.push_back(b.str());
  return out;
}

Json numbers(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(rounded(x));
  return out;
}

Json machine_json(const MachineSpec& spec) {
  Json j;
  j["n"] = spec.n();
  j["omega"] = rounded(spec.omega());
  j["gaps"] = numbers(spec.gaps());
  if (spec.was_reordered()) j["input_gaps"] = numbers(spec.original_gaps());
  j["t_system"] = rounded(spec.t_system());
  j["t_machine"] = rounded(spec.t_machine());
  j["tolerance"] = spec.tolerance();
  j["family"] = to_string(spec.family());
  return j;
}

Json pairs_json(const std::vector<std::pair<BitString, BitString>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({a.str(), b.str()});
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("out", "cannot write '" + path + "'");
  f << content;
  if (!f) throw ValidationError("out", "failed writing '" + path + "'");
}

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw ValidationError("n", "expected N or A:B, got '" + text + "'");
    }
    return v;
  };
  const auto colon = text.find(':');
  const int lo = to_int(text.substr(0, colon));
  const int hi = colon == std::string::npos ? lo : to_int(text.substr(colon + 1));
  if (lo < 1 || hi > kMaxMachineQubits || lo > hi) {
    throw ValidationError("n", "range must lie in [1, " +
                                   std::to_string(kMaxMachineQubits) + "], got '" +
                                   text + "'");
  }
  return {lo, hi};
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeArgs {
  std::string machine;
  std::string csv;
};

int analyze(const AnalyzeArgs& a, std::ostream& out) {
  const MachineSpec spec = load_machine_file(a.machine);
  const CoolingReport r = delta_p0(spec);
  const ReducibilityReport red = analyze_reducibility(spec);
  const SwappableSet s = swappable_set(spec);

  Json doc;
  doc["machine"] = machine_json(spec);
  doc["threshold"] = rounded(s.threshold);
  doc["swappable"] = strings(s.members);
  doc["swappable_count"] = s.size();
  doc["p0_initial"] = rounded(r.p0_initial);
  doc["p0_final"] = rounded(r.p0_final);
  doc["delta_p0"] = rounded(r.delta_p0);
  Json bounds;
  bounds["virtual"] = rounded(r.bound_virtual);
  bounds["fixed"] = r.bound_fixed ? Json(rounded(*r.bound_fixed)) : Json(nullptr);
  bounds["fixed_applicable"] = r.bound_fixed.has_value();
  bounds["adaptive"] = rounded(r.bound_adaptive);
  const auto anchor = adaptive_anchor(spec);
  bounds["adaptive_anchor"] = anchor ? Json(anchor->str()) : Json(nullptr);
  doc["bounds"] = bounds;
  Json rj;
  rj["order"] = red.order;
  rj["irreducible"] = red.irreducible;
  rj["witness"] = red.witness ? Json(red.witness->str()) : Json(nullptr);
  rj["n_minus_1_reducible"] = red.n_minus_1_reducible;
  rj["cannot_cool"] = red.cannot_cool;
  doc["reducibility"] = rj;
  doc["requires_toffoli"] = spec.n() == 2 ? Json(requires_toffoli(spec)) : Json(nullptr);
  out << doc.dump(2) << "\n";

  if (!a.csv.empty()) {
    write_file(a.csv, std::string(kCsvHeader) + "\n" + format_row(evaluate_row(spec)) + "\n");
  }
  return kExitOk;
}

// ---- synthesize -----------------------------------------------------------

struct SynthesizeArgs {
  std::string machine;
  std::string cost = "hamming";
  std::string cost_machine;
  bool enumerate = false;
  std::size_t limit = 100;
  std::string out_prefix;
};

int synthesize(const SynthesizeArgs& a, std::ostream& out) {
  const MachineSpec spec = load_machine_file(a.machine);
  const CostKind kind = parse_cost_kind(a.cost);
  std::optional<MachineSpec> energies;
  if (!a.cost_machine.empty()) {
    energies = load_machine_file(a.cost_machine);
    if (energies->n() != spec.n()) {
      throw ValidationError("cost-machine", "has " + std::to_string(energies->n()) +
                                                " qubits, the machine has " +
                                                std::to_string(spec.n()));
    }
  }
  const int width = spec.n() + 1;
  const BipartiteCoolingGraph graph = build_graph(spec);

  Json doc;
  doc["machine"] = machine_json(spec);
  doc["cost"] = to_string(kind);
  doc["swappable"] = Json::array();
  for (const auto& a_node : graph.left) doc["swappable"].push_back(a_node.machine_part().str());

  std::vector<TwoLevelPermutation> tlps;
  if (graph.empty()) {
    doc["matrix"] = nullptr;
    doc["matching"] = {{"pairs", Json::array()}, {"total", 0}};
  } else {
    const CostMatrix matrix = cost_matrix(graph, kind, energies ? *energies : spec);
    const Matching matching = hungarian(matrix);
    Json entries = Json::array();
    for (const auto& row : matrix.to_rows()) entries.push_back(numbers(row));
    doc["matrix"] = {{"rows", strings(matrix.row_labels())},
                     {"cols", strings(matrix.col_labels())},
                     {"entries", entries}};
    doc["matching"] = {{"pairs", pairs_json(matching.pairs(matrix))},
                       {"total", rounded(matching.total)}};
    if (a.enumerate) {
      Json all = Json::array();
      for (const auto& m : enumerate_optimal(matrix, a.limit)) {
        all.push_back({{"pairs", pairs_json(m.pairs(matrix))}, {"total", rounded(m.total)}});
      }
      doc["optimal_matchings"] = all;
    }
    tlps = cooling_unitary(matrix, matching);
  }

  const Circuit native = decompose_all(width, tlps);
  const Circuit lowered = lower_circuit(native);
  Json cj;
  cj["width"] = width;
  cj["transpositions"] = Json::array();
  for (const auto& t : tlps) cj["transpositions"].push_back({t.j().str(), t.k().str()});
  cj["native_gates"] = native.gates.size();
  cj["lowered_gates"] = lowered.gates.size();
  cj["multi_control_gates"] = count_gates_with_controls(lowered, 2);
  cj["parity"] = tlps.size() % 2 == 0 ? "even" : "odd";
  if (width <= 16) {
    cj["verified"] = permutation_table(lowered) == transposition_table(width, tlps) &&
                     permutation_table(native) == transposition_table(width, tlps);
  } else {
    cj["verified"] = nullptr;
  }
  if (!a.out_prefix.empty()) {
    const std::string native_path = a.out_prefix + "_native.txt";
    const std::string lowered_path = a.out_prefix + "_lowered.txt";
    write_file(native_path, render_circuit(native));
    write_file(lowered_path, render_circuit(lowered));
    cj["files"] = {{"native", native_path}, {"lowered", lowered_path}};
  }
  doc["circuit"] = cj;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs {
  std::vector<std::string> families;
  std::vector<double> gammas;
  std::optional<double> omega;
  std::optional<double> omega_ratio;
  std::string n_range = "2:12";
  double t_system = 1.0;
  double t_machine = 1.0;
  std::vector<std::string> machines;
  std::string out;
};

int bounds(const BoundsArgs& a, std::ostream& out) {
  std::vector<MachineSpec> specs;
  if (!a.families.empty()) {
    if (a.gammas.empty()) throw ValidationError("gamma", "required with --family");
    if (a.gammas.size() != 1 && a.gammas.size() != a.families.size()) {
      throw ValidationError("gamma", "give one value or one per family");
    }
    if (a.omega.has_value() == a.omega_ratio.has_value()) {
      throw ValidationError("omega", "give exactly one of --omega and --omega-ratio");
    }
    const auto [lo, hi] = parse_range(a.n_range);
    MachineSpec::Options opts;
    opts.t_system = a.t_system;
    opts.t_machine = a.t_machine;
    for (std::size_t f = 0; f < a.families.size(); ++f) {
      const GapFamily family = parse_gap_family(a.families[f]);
      if (family == GapFamily::kExplicit) {
        throw ValidationError("family", "use --machine for explicit machines");
      }
      const double gamma = a.gammas.size() == 1 ? a.gammas[0] : a.gammas[f];
      for (int n = lo; n <= hi; ++n) {
        const double g1 = family_gaps(family, gamma, n).front();
        const double omega = a.omega ? *a.omega : *a.omega_ratio * g1;
        specs.push_back(MachineSpec::from_family(family, gamma, n, omega, opts));
      }
    }
  }
  for (const auto& path : a.machines) specs.push_back(load_machine_file(path));
  if (specs.empty()) throw ValidationError("family", "nothing to sweep: give --family or --machine");

  std::string csv = std::string(kCsvHeader) + "\n";
  for (const auto& row : evaluate_rows(specs)) csv += format_row(row) + "\n";
  if (a.out.empty()) {
    out << csv;
  } else {
    write_file(a.out, csv);
  }
  return kExitOk;
}

// ---- orders ---------------------------------------------------------------

int orders(int n, std::optional<int> ell, std::ostream& out) {
  Json doc;
  doc["n"] = n;
  doc["never_set"] = strings(never_swappable_set(n));
  Json sets = Json::array();
  std::vector<int> ells;
  if (ell) {
    ells.push_back(*ell);
  } else {
    for (int l = (n % 2 == 0 ? -1 : 0); l <= (n - 1) / 2; ++l) ells.push_back(l);
  }
  for (int l : ells) {
    const TheoremSets t = minimal_swappable_set(n, l);
    sets.push_back({{"ell", l}, {"anchor", t.anchor.str()}, {"minimal_set", strings(t.minimal_set)}});
  }
  doc["minimal_sets"] = sets;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

// ---- graph ----------------------------------------------------------------

int graph(const std::string& machine, const std::string& dot, bool hypercube,
          const std::string& cost, std::ostream& out) {
  const MachineSpec spec = load_machine_file(machine);
  std::string text;
  if (hypercube) {
    text = hypercube_to_dot(spec);
  } else {
    const BipartiteCoolingGraph g = build_graph(spec);
    if (g.empty()) {
      text = graph_to_dot(g);
    } else {
      const CostMatrix m = cost_matrix(g, parse_cost_kind(cost), spec);
      const Matching best = hungarian(m);
      text = graph_to_dot(g, &m, &best);
    }
  }
  if (dot.empty()) {
    out << text;
  } else {
    write_file(dot, text);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal unitary cooling of a qubit with an n-qubit thermal machine", "qcool"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qcool 0.1.0");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Swappable set, population gain, bounds, reducibility");
  analyze_cmd->add_option("--machine", analyze_args.machine, "Machine JSON file")->required();
  analyze_cmd->add_option("--csv", analyze_args.csv, "Also write one sweep CSV row here");

  SynthesizeArgs synth_args;
  auto* synth_cmd = app.add_subcommand("synthesize", "Matching, cooling unitary and circuits");
  synth_cmd->add_option("--machine", synth_args.machine, "Machine JSON file")->required();
  synth_cmd->add_option("--cost", synth_args.cost, "hamming or energy")
      ->check(CLI::IsMember({"hamming", "energy"}));
  synth_cmd->add_option("--cost-machine", synth_args.cost_machine,
                        "Machine whose energies define the energy cost (default: --machine)");
  synth_cmd->add_flag("--enumerate", synth_args.enumerate, "List every optimal matching");
  synth_cmd->add_option("--limit", synth_args.limit, "Maximum matchings to list")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--out", synth_args.out_prefix,
                        "Write PREFIX_native.txt and PREFIX_lowered.txt");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Sweep exact gain and bounds over machine families");
  bounds_cmd->add_option("--family", bounds_args.families, "degenerate,linear,exponential")
      ->delimiter(',');
  bounds_cmd->add_option("--gamma", bounds_args.gammas, "Family gap (one, or one per family)")
      ->delimiter(',');
  bounds_cmd->add_option("--omega", bounds_args.omega, "System gap");
  bounds_cmd->add_option("--omega-ratio", bounds_args.omega_ratio, "System gap as a multiple of gamma_1");
  bounds_cmd->add_option("--n", bounds_args.n_range, "Machine sizes, N or A:B");
  bounds_cmd->add_option("--t-system", bounds_args.t_system, "System temperature");
  bounds_cmd->add_option("--t-machine", bounds_args.t_machine, "Machine temperature");
  bounds_cmd->add_option("--machine", bounds_args.machines, "Explicit machine JSON (repeatable)");
  bounds_cmd->add_option("--out", bounds_args.out, "CSV output file (default: stdout)");

  VerifyOptions verify_opts;
  bool random_mode = false;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized oracle-equivalence checks");
  verify_cmd->add_flag("--random", random_mode, "Sample random machines")->required();
  verify_cmd->add_option("--n", verify_opts.max_n, "Largest machine size")
      ->check(CLI::Range(1, 10));
  verify_cmd->add_option("--trials", verify_opts.trials, "Number of machines")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify_opts.seed, "mt19937_64 seed");
  verify_cmd->add_flag("--random-temperatures", verify_opts.random_temperatures,
                       "Draw T_S >= T_M instead of equal temperatures");
  verify_cmd->add_option("--max-report", verify_opts.max_report, "Mismatches to list")
      ->check(CLI::NonNegativeNumber);

  int orders_n = 0;
  std::optional<int> orders_ell;
  auto* orders_cmd = app.add_subcommand("orders", "Gamma-independent never/always swappable sets");
  orders_cmd->add_option("--n", orders_n, "Machine size")->required();
  orders_cmd->add_option("--ell", orders_ell, "Window index (default: all)");

  std::string graph_machine, graph_dot, graph_cost = "hamming";
  bool graph_hypercube = false;
  auto* graph_cmd = app.add_subcommand("graph", "DOT export of the cooling graph");
  graph_cmd->add_option("--machine", graph_machine, "Machine JSON file")->required();
  graph_cmd->add_option("--dot", graph_dot, "Output file (default: stdout)");
  graph_cmd->add_flag("--hypercube", graph_hypercube, "Export the joint-level hypercube instead");
  graph_cmd->add_option("--cost", graph_cost, "Edge weights: hamming or energy")
      ->check(CLI::IsMember({"hamming", "energy"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(analyze_args, out);
    if (synth_cmd->parsed()) return synthesize(synth_args, out);
    if (bounds_cmd->parsed()) return bounds(bounds_args, out);
    if (orders_cmd->parsed()) return orders(orders_n, orders_ell, out);
    if (graph_cmd->parsed()) {
      return graph(graph_machine, graph_dot, graph_hypercube, graph_cost, out);
    }
    if (verify_cmd->parsed()) {
      const VerifyOutcome outcome = run_verify(verify_opts);
      out << outcome.report;
      return outcome.ok ? kExitOk : kExitMismatch;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvalid;
  }
  err << app.help();
  return kExitInvalid;
}

}  // namespace qcool::cli
