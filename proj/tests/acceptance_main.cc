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

// Prints one [PASS]/[FAIL] line per acceptance criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "qcool/bitstring.h"
#include "qcool/circuit.h"
#include "qcool/cooling.h"
#include "qcool/machine.h"
#include "qcool/matching.h"
#include "qcool/oracle.h"
#include "qcool/orders.h"
#include "qcool/reducibility.h"
#include "qcool/sampling.h"
#include "support/brute_force.h"

namespace qcool {
namespace {

constexpr double kExact = 1e-12;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(15);
    s << what << ": got " << got << ", want " << want << " +- " << tol;
    expect(std::fabs(got - want) <= tol, s.str());
  }
  bool ok() const { return failed_ == 0; }
  const std::vector<std::string>& failures() const { return failures_; }
  int failed() const { return failed_; }

 private:
  std::vector<std::string> failures_;
  int failed_ = 0;
};

MachineSpec Ln(double w, std::vector<double> g) {
  for (auto& x : g) x = std::log(x);
  return MachineSpec(std::log(w), g);
}

std::vector<BitString> Parse(std::initializer_list<const char*> texts) {
  std::vector<BitString> out;
  for (const char* t : texts) out.push_back(BitString::parse(t));
  return out;
}

std::string Data(const char* name) { return std::string(QCOOL_DATA_DIR) + "/" + name; }

double PipelineP0(const MachineSpec& spec, std::vector<TwoLevelPermutation>* tlps_out = nullptr) {
  const auto pops = joint_populations(spec);
  const auto graph = build_graph(spec);
  if (graph.empty()) return system_ground_population(pops);
  const auto matrix = cost_matrix(graph, CostKind::kHamming, spec);
  const auto tlps = cooling_unitary(matrix, hungarian(matrix));
  if (tlps_out) *tlps_out = tlps;
  return system_ground_population(apply_tlps(pops, tlps));
}

// ---------------------------------------------------------------------------

void TwoQubitGoldenCases(Check& c) {
  const auto reducible = load_machine_file(Data("two_qubit_reducible.json"));
  c.expect(swappable_set(reducible).members == Parse({"01", "11"}), "(ln3, ln8) swappable set");
  c.expect(reducibility_order(reducible) == 1, "(ln3, ln8) order 1");
  c.expect(!requires_toffoli(reducible), "(ln3, ln8) needs no Toffoli");
  c.near(delta_p0(reducible).p0_final, 8.0 / 9.0, kExact, "(ln3, ln8) p0_final");

  const auto irreducible = load_machine_file(Data("two_qubit_irreducible.json"));
  c.expect(swappable_set(irreducible).members == Parse({"11"}), "(ln5, ln8) swappable set");
  c.expect(is_irreducible(irreducible).irreducible, "(ln5, ln8) irreducible");
  c.expect(requires_toffoli(irreducible), "(ln5, ln8) needs a Toffoli");
  std::vector<TwoLevelPermutation> tlps;
  PipelineP0(irreducible, &tlps);
  const Circuit lowered = lower_circuit(decompose_all(3, tlps));
  c.expect(count_gates_with_controls(lowered, 2) >= 1, "(ln5, ln8) lowered circuit has a CCX");
  const double oracle = sort_cool(joint_populations(irreducible)).p0_final;
  c.near(delta_p0(irreducible).p0_final, oracle, 1e-6, "(ln5, ln8) p0_final vs oracle");
  c.near(delta_p0(irreducible).p0_final, 0.901235, 1e-6, "(ln5, ln8) p0_final");
}

void ThreeQubitCases(Check& c) {
  const auto case2 = load_machine_file(Data("three_qubit_irreducible.json"));
  double z = 1.0, top = 1.0;
  for (double g : case2.gaps()) {
    z *= 1.0 + std::exp(-g);
    top += std::exp(-g);
  }
  c.near(delta_p0(case2).p0_final, top / z, kExact, "case 2 p0_final");
  const auto irr = is_irreducible(case2);
  c.expect(irr.irreducible, "case 2 irreducible");
  c.expect(irr.witness && irr.witness->str() == "10", "case 2 witness 10");

  // omega = ln2 < gamma_3 - gamma_1 - gamma_2 = ln(32/12).
  const auto case3 = Ln(2, {3, 4, 32});
  c.expect(is_n_minus_1_reducible(case3), "case 3 (n-1)-reducible");
  c.near(delta_p0(case3).p0_final, 1.0 / (1.0 + std::exp(-case3.gap(3))), kExact,
         "case 3 p0_final");
}

void SmallestMatchingExample(Check& c) {
  const auto spec = load_machine_file(Data("three_qubit_eq14.json"));
  const auto matrix = cost_matrix(build_graph(spec), CostKind::kHamming, spec);
  const std::vector<std::vector<double>> want = {{4, 2, 3}, {2, 4, 3}, {3, 3, 4}};
  c.expect(matrix.to_rows() == want, "cost matrix entries");
  c.expect(hungarian(matrix).total == 8, "hungarian total 8");
  const auto all = enumerate_optimal(matrix);
  c.expect(all.size() == 3, "3 optimal matchings");
  c.expect(testing::count_optimal_assignments(want, 8) == 3, "brute force finds 3 optima");
  c.expect(testing::brute_force_assignment(want) == 8, "brute force minimum 8");
}

void FourByFourExample(Check& c) {
  const auto spec = load_machine_file(Data("three_qubit_irreducible.json"));
  const auto graph = build_graph(spec);
  c.expect(hungarian(cost_matrix(graph, CostKind::kHamming, spec)).total == 10,
           "Hamming total 10");

  const auto energies = load_machine_file(Data("energy_cost_reference.json"));
  const auto matrix = cost_matrix(graph, CostKind::kEnergy, energies);
  const std::vector<std::vector<double>> want = {
      {16, 6, 2, 15}, {6, 8, 0, 12}, {2, 0, -8, 6}, {15, 12, 6, 24}};
  c.expect(matrix.to_rows() == want, "energy matrix entries");
  const auto m = hungarian(matrix);
  c.expect(m.total == 24, "energy total 24");
  auto pairs = m.pairs(matrix);
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::pair<BitString, BitString>> red;
  for (auto [a, b] : {std::pair{"0011", "1010"}, {"0101", "1100"}, {"0110", "1000"},
                      {"0111", "1001"}}) {
    red.emplace_back(BitString::parse(a), BitString::parse(b));
  }
  c.expect(pairs == red, "energy optimum is the red pairing");
  c.expect(assignment_total(matrix, {3, 2, 1, 0}) == 30, "blue pairing costs 30");
  c.expect(enumerate_optimal(matrix).size() == 1, "energy optimum unique");
}

void FamilySweep(Check& c, const std::filesystem::path& csv) {
  std::vector<MachineSpec> specs;
  for (auto [family, gamma] : {std::pair{GapFamily::kDegenerate, 1.0},
                               {GapFamily::kLinear, 1.0},
                               {GapFamily::kExponential, 1.1}}) {
    for (int n = 2; n <= 12; ++n) {
      specs.push_back(MachineSpec::from_family(family, gamma, n, 0.5 * gamma));
    }
  }
  const auto rows = cli::evaluate_rows(specs);
  std::ofstream f(csv);
  f << cli::kCsvHeader << "\n";
  for (const auto& r : rows) {
    f << cli::format_row(r) << "\n";
    const std::string at = r.family + " n=" + std::to_string(r.n);
    c.expect(r.bound_virtual <= r.delta_p0 + kExact, "virtual bound at " + at);
    c.expect(r.bound_adaptive <= r.delta_p0 + kExact, "adaptive bound at " + at);
    if (r.fixed_applicable) {
      c.expect(r.bound_fixed <= r.delta_p0 + kExact, "fixed bound at " + at);
      c.expect(r.bound_adaptive >= r.bound_fixed - kExact, "adaptive >= fixed at " + at);
    }
  }
  f.close();
  c.expect(f.good() && rows.size() == 33, "CSV written");
}

// Single raising moves 0 -> 1 and 10 -> 01 generate the lex up-set.
std::vector<BitString> RaisingMoves(const BitString& j) {
  std::vector<BitString> out;
  for (int p = 1; p <= j.width(); ++p) {
    if (j.bit(p) == 0) out.push_back(j.flipped(p));
    if (p < j.width() && j.bit(p) == 1 && j.bit(p + 1) == 0) {
      out.push_back(j.flipped(p).flipped(p + 1));
    }
  }
  return out;
}

void PropertySuites(Check& c) {
  std::mt19937_64 rng(20260101);
  SamplingOptions opts;
  opts.max_n = 8;
  for (int trial = 0; trial < 1000; ++trial) {
    const MachineSpec spec = sample_machine(rng, opts);
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    const auto s = swappable_set(spec);
    const auto pops = joint_populations(spec);
    const auto sorted = sort_cool(pops);

    c.expect(s.members == sorted.swapped, "(a) swappable set = oracle" + tag);

    std::vector<TwoLevelPermutation> tlps;
    c.near(PipelineP0(spec, &tlps), sorted.p0_final, kExact, "(b) pipeline p0" + tag);

    const double eta = 1.0 - spec.t_machine() / spec.t_system();
    for (const auto& i : all_strings(spec.n())) {
      for (const auto& j : all_strings(spec.n())) {
        if (cools(spec, i, j)) {
          c.expect(carnot_margin(spec, i, j) < eta, "(c) Carnot " + i.str() + "," + j.str() + tag);
        }
      }
    }

    for (const auto& j : s.members) {
      for (const auto& k : RaisingMoves(j)) c.expect(s.contains(k), "(d) closure " + k.str() + tag);
    }

    if (!s.empty()) {
      c.expect(is_irreducible(spec).irreducible == (reducibility_order(spec) == 0),
               "(e) irreducible vs order" + tag);
    }

    const int width = spec.n() + 1;
    const std::size_t checked = spec.n() <= 5 ? tlps.size() : std::min<std::size_t>(tlps.size(), 4);
    for (std::size_t t = 0; t < checked; ++t) {
      const std::vector<TwoLevelPermutation> one = {tlps[t]};
      const Circuit lowered = lower_circuit(decompose_tlp(tlps[t]));
      c.expect(permutation_table(lowered) == transposition_table(width, one),
               "(h) circuit " + tlps[t].j().str() + tag);
      c.expect(static_cast<int>(lowered.gates.size()) >= hamming_distance(tlps[t].j(), tlps[t].k()),
               "(h) gate count" + tag);
    }
  }

  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 8; ++n) {
    const auto never = never_swappable_set(n);
    SamplingOptions fixed_n = opts;
    fixed_n.min_n = fixed_n.max_n = n;
    for (int trial = 0; trial < 200; ++trial) {
      const auto gaps = sample_machine(rng, fixed_n).gaps();
      double e_max = 0;
      for (double g : gaps) e_max += g;
      const auto s = swappable_set(MachineSpec(e_max * (1.0 - u(rng)), gaps));
      for (const auto& j : never) c.expect(!s.contains(j), "(f) never set n=" + std::to_string(n));
      for (int ell = (n % 2 == 0 ? -1 : 0); ell <= (n - 1) / 2; ++ell) {
        const double window = minimal_set_window(MachineSpec(1.0, gaps), ell);
        if (!(window > 0)) continue;
        const auto si = swappable_set(MachineSpec(window * (1.0 - u(rng)), gaps));
        for (const auto& j : minimal_swappable_set(n, ell).minimal_set) {
          c.expect(si.contains(j), "(f) minimal set n=" + std::to_string(n) +
                                       " ell=" + std::to_string(ell) + " " + j.str());
        }
      }
    }
  }

  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = testing::random_matrix(rng, size(rng), -10.0, 10.0);
    c.near(hungarian(CostMatrix(rows)).total, testing::brute_force_assignment(rows), 1e-9,
           "(g) hungarian vs brute force");
  }
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds, 0 for none
  std::function<void(Check&)> body;
};

}  // namespace
}  // namespace qcool

int main(int argc, char** argv) {
  using namespace qcool;
  const std::filesystem::path csv =
      argc > 1 ? std::filesystem::path(argv[1])
               : std::filesystem::temp_directory_path() / "qcool_acceptance_sweep.csv";
  const std::vector<Criterion> criteria = {
      {1, "two-qubit golden cases", 1.0, TwoQubitGoldenCases},
      {2, "three-qubit cases 2 and 3", 0.0, ThreeQubitCases},
      {3, "3x3 matching example", 0.0, SmallestMatchingExample},
      {4, "4x4 Hamming and energy matchings", 1.0, FourByFourExample},
      {5, "family sweep n=2..12", 10.0, [&](Check& c) { FamilySweep(c, csv); }},
      {6, "randomized property suites", 60.0, PropertySuites},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.time_limit > 0) {
      check.expect(secs < cr.time_limit, "runtime over " + std::to_string(cr.time_limit) + " s");
    }
    std::printf("[%s] criterion %d: %s (%.3f s)\n", check.ok() ? "PASS" : "FAIL", cr.id, cr.name,
                secs);
    for (const auto& f : check.failures()) std::printf("    %s\n", f.c_str());
    if (!check.ok()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
