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

#ifndef QCOOL_REDUCIBILITY_H_
#define QCOOL_REDUCIBILITY_H_

#include <optional>

#include "qcool/bitstring.h"
#include "qcool/machine.h"

namespace qcool {

struct ReducibilityReport {
  int order = 0;  // number of leading (warmest) qubits that are free
  bool irreducible = false;
  std::optional<BitString> witness;  // l in {0,1}^{n-1}
  bool n_minus_1_reducible = false;
  bool cannot_cool = false;  // swappable set is empty; order is then n
};

// Largest k such that the swappable set is closed under flipping each of the
// bits 1..k. Returns n when the swappable set is empty.
int reducibility_order(const MachineSpec& spec);

struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<BitString> witness;
};

// True iff some l gives 0 <= threshold - l.Gamma_{2:n} < gamma_1, i.e. 1l is
// swappable while 0l is not. The witness is the lowest-energy such l (ties:
// smallest numeric value). For n = 1 the only candidate is the empty tail and
// no witness string is returned.
IrreducibilityResult is_irreducible(const MachineSpec& spec);

// threshold < gamma_n: optimal cooling is a swap with the coldest qubit.
bool is_n_minus_1_reducible(const MachineSpec& spec);

struct DegenerateIrreducibility {
  bool irreducible = false;
  int t = -1;  // smallest admissible t, -1 when none
};

// Degenerate machine test: some integer t in [0, n-1] with
// -(n-2t) gamma <= tau_omega <= 2 gamma - (n-2t) gamma.
DegenerateIrreducibility degenerate_irreducibility(int n, double gamma,
                                                   double tau_omega);

ReducibilityReport analyze_reducibility(const MachineSpec& spec);

}  // namespace qcool

#endif  // QCOOL_REDUCIBILITY_H_
