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

#ifndef QCOOL_ORACLE_H_
#define QCOOL_ORACLE_H_

#include <vector>

#include "qcool/bitstring.h"
#include "qcool/circuit.h"
#include "qcool/machine.h"

namespace qcool {

inline constexpr int kMaxOracleQubits = 20;

// Diagonal of the joint Gibbs state, indexed by joint string value.
struct PopulationVector {
  int width = 0;  // n + 1
  std::vector<double> values;

  double at(const BitString& joint) const;
  double total() const;
};

// Throws UsageError for n > kMaxOracleQubits.
PopulationVector joint_populations(const MachineSpec& spec);

struct SortCoolResult {
  double p0_final = 0.0;
  std::vector<BitString> swapped;  // machine strings, ascending
};

// Puts the 2^n largest populations on the system ground subspace. Equal
// populations at the cut keep their current subspace.
SortCoolResult sort_cool(const PopulationVector& populations);

// Same result by repeated pairwise exchange of the largest excited and the
// smallest ground population while the excited one is strictly larger.
SortCoolResult sort_cool_iterative(const PopulationVector& populations);

// Exchanges entries per transposition. Throws UsageError on width mismatch.
PopulationVector apply_tlps(const PopulationVector& populations,
                            const std::vector<TwoLevelPermutation>& tlps);

// Moves populations along the basis permutation realized by `circuit`.
PopulationVector apply_circuit(const PopulationVector& populations,
                               const Circuit& circuit);

// Sum over the |0_S ...> half.
double system_ground_population(const PopulationVector& populations);

}  // namespace qcool

#endif  // QCOOL_ORACLE_H_
