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

#ifndef QCOOL_MACHINE_H_
#define QCOOL_MACHINE_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qcool/bitstring.h"

namespace qcool {

inline constexpr int kMaxMachineQubits = 24;
inline constexpr double kDefaultTolerance = 1e-9;

// Gap family shorthands accepted by load_machine.
enum class GapFamily { kExplicit, kDegenerate, kLinear, kExponential };

const char* to_string(GapFamily f);
GapFamily parse_gap_family(std::string_view name);

// Gaps for a family: degenerate gamma_i = g, linear gamma_i = i*g,
// exponential gamma_i = g^i (i = 1..n).
std::vector<double> family_gaps(GapFamily family, double gamma, int n);

// A system qubit (gap omega, temperature T_S) and an n-qubit thermal machine
// (gaps Gamma, temperature T_M). Units: k_B = hbar = 1. Immutable once built;
// gaps are stored sorted non-decreasing.
class MachineSpec {
 public:
  struct Options {
    double t_system = 1.0;
    double t_machine = 1.0;
    double tolerance = kDefaultTolerance;
  };

  // Validates and sorts. Throws ValidationError naming the bad field.
  MachineSpec(double omega, std::vector<double> gaps);
  MachineSpec(double omega, std::vector<double> gaps, Options options);

  static MachineSpec from_family(GapFamily family, double gamma, int n,
                                 double omega);
  static MachineSpec from_family(GapFamily family, double gamma, int n,
                                 double omega, Options options);

  double omega() const noexcept { return omega_; }
  const std::vector<double>& gaps() const noexcept { return gaps_; }
  double gap(int pos) const { return gaps_.at(static_cast<std::size_t>(pos - 1)); }
  int n() const noexcept { return static_cast<int>(gaps_.size()); }
  double t_system() const noexcept { return t_system_; }
  double t_machine() const noexcept { return t_machine_; }
  double beta_system() const noexcept { return 1.0 / t_system_; }
  double beta_machine() const noexcept { return 1.0 / t_machine_; }
  double tolerance() const noexcept { return tolerance_; }
  double e_max() const noexcept { return e_max_; }

  // (T_M / T_S) * omega, the temperature-rescaled system gap.
  double scaled_omega() const noexcept { return t_machine_ / t_system_ * omega_; }

  // sort_permutation()[i] is the index in the caller's original gap list of
  // the i-th sorted gap. Identity when the input was already sorted.
  const std::vector<std::size_t>& sort_permutation() const noexcept {
    return sort_permutation_;
  }
  const std::vector<double>& original_gaps() const noexcept {
    return original_gaps_;
  }
  bool was_reordered() const;

  GapFamily family() const noexcept { return family_; }
  // Family base gap; for explicit machines this is gamma_1.
  double family_gamma() const noexcept { return family_gamma_; }

  // Partition functions Z_S = 1 + e^{-beta_S omega}, Z_M = prod (1 + e^{-beta_M gamma_i}).
  double z_system() const;
  double z_machine() const;

 private:
  double omega_;
  std::vector<double> gaps_;
  std::vector<double> original_gaps_;
  std::vector<std::size_t> sort_permutation_;
  double t_system_ = 1.0;
  double t_machine_ = 1.0;
  double tolerance_ = kDefaultTolerance;
  double e_max_ = 0.0;
  GapFamily family_ = GapFamily::kExplicit;
  double family_gamma_ = 0.0;
};

// Parses the machine JSON document:
//   {"omega": w, "gaps": [..], "t_system"?: T, "t_machine"?: T, "tolerance"?: e}
//   {"family": "degenerate"|"linear"|"exponential", "gamma": g, "n": k,
//    "omega": w, ...}
MachineSpec load_machine(std::string_view document);
MachineSpec load_machine_file(const std::filesystem::path& path);

// Energy i.Gamma of a machine string (width n) or of a joint string (width
// n + 1, adds i_S * omega). Throws UsageError on any other width.
double energy(const MachineSpec& spec, const BitString& m);

// Shifted median 1/2 ((T_M/T_S) omega + E_Max).
double threshold(const MachineSpec& spec);

// Absolute slack used for threshold comparisons: eps * max(1, |threshold|).
double threshold_slack(const MachineSpec& spec);

// Membership test for the swappable set, including the tie policy: strings
// within the slack of the threshold are not swappable.
bool is_swappable(const MachineSpec& spec, const BitString& m);

struct SwappableSet {
  std::vector<BitString> members;  // machine strings, ascending numeric order
  double threshold = 0.0;

  bool contains(const BitString& m) const;
  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
};

// All machine strings whose energy exceeds the threshold.
SwappableSet swappable_set(const MachineSpec& spec);

// True iff exchanging |0_S i> with |1_S j> cools the system, i.e.
// (T_M/T_S) omega < (i - j).Gamma (beyond the comparison slack).
bool cools(const MachineSpec& spec, const BitString& i, const BitString& j);

// Relative change of the system gap, (omega - (i - j).Gamma) / omega. Any
// cooling pair satisfies margin < 1 - T_M/T_S.
double carnot_margin(const MachineSpec& spec, const BitString& i,
                     const BitString& j);

}  // namespace qcool

#endif  // QCOOL_MACHINE_H_
