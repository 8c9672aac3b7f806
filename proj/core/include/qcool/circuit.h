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

#ifndef QCOOL_CIRCUIT_H_
#define QCOOL_CIRCUIT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcool/bitstring.h"
#include "qcool/machine.h"
#include "qcool/matching.h"

namespace qcool {

// Exchange of two joint levels, identity elsewhere. Stored with j < k.
class TwoLevelPermutation {
 public:
  // Throws UsageError when the strings are equal or of different widths.
  TwoLevelPermutation(const BitString& a, const BitString& b);

  const BitString& j() const noexcept { return j_; }
  const BitString& k() const noexcept { return k_; }
  int width() const noexcept { return j_.width(); }

  friend bool operator==(const TwoLevelPermutation&,
                         const TwoLevelPermutation&) = default;

 private:
  BitString j_;
  BitString k_;
};

// Qubit 0 is the system qubit (leftmost character of a joint string).
struct Control {
  int qubit = 0;
  int polarity = 1;
  friend bool operator==(const Control&, const Control&) = default;
};

// Multi-controlled X; a plain X has no controls.
struct Gate {
  int target = 0;
  std::vector<Control> controls;

  bool all_positive() const;
  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  int width = 0;
  std::vector<Gate> gates;

  void append(const Circuit& other);
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

// One transposition per matched pair. Throws InternalError if a level shows
// up in two pairs.
std::vector<TwoLevelPermutation> cooling_unitary(const CostMatrix& matrix,
                                                 const Matching& matching);

// Gray path from j to k flipping the differing bits left to right, realized
// as V_1 .. V_{d-1} W V_{d-1} .. V_1 with every gate controlled on all other
// qubits (mixed polarity). 2d - 1 gates for d = D_H(j, k).
Circuit decompose_tlp(const TwoLevelPermutation& tlp);

// Concatenation of decompose_tlp over `tlps`.
Circuit decompose_all(int width, const std::vector<TwoLevelPermutation>& tlps);

// Replaces negative controls by X conjugation. Same permutation, positive
// controls only.
Circuit lower_circuit(const Circuit& circuit);

BitString apply_circuit(const Circuit& circuit, const BitString& state);

inline constexpr int kMaxTableWidth = 22;

// table[v] is the image of basis state v. Width <= kMaxTableWidth.
std::vector<std::uint32_t> permutation_table(const Circuit& circuit);

// Table of the product of disjoint transpositions.
std::vector<std::uint32_t> transposition_table(
    int width, const std::vector<TwoLevelPermutation>& tlps);

// True iff the permutation is even.
bool is_even_permutation(const std::vector<std::uint32_t>& table);

// Number of gates with at least `min_controls` controls.
std::size_t count_gates_with_controls(const Circuit& circuit,
                                      std::size_t min_controls);

// Two-qubit machines: gamma_2 <= (T_M/T_S) w + gamma_1 forces an odd
// cooling permutation, which needs at least one Toffoli. Throws UsageError
// unless n = 2.
bool requires_toffoli(const MachineSpec& spec);

// Text format, one gate per line:
//   MCX target=<q> controls=<q:pol,q:pol,...>
//   X target=<q>
// preceded by a "width <w>" line.
std::string render_circuit(const Circuit& circuit);
Circuit parse_circuit(std::string_view text);

}  // namespace qcool

#endif  // QCOOL_CIRCUIT_H_
