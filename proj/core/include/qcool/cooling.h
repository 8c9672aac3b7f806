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

#ifndef QCOOL_COOLING_H_
#define QCOOL_COOLING_H_

#include <optional>
#include <span>

#include "qcool/bitstring.h"
#include "qcool/machine.h"

namespace qcool {

// Optimal ground-state gain of the system qubit and its lower bounds.
struct CoolingReport {
  double p0_initial = 0.0;
  double p0_final = 0.0;
  double delta_p0 = 0.0;
  std::size_t swappable_count = 0;
  double bound_virtual = 0.0;
  std::optional<double> bound_fixed;  // nullopt when not applicable
  double bound_adaptive = 0.0;
  double z_system = 0.0;
  double z_machine = 0.0;
};

// Population moved into |0_S m> by exchanging it with |1_S conj(m)>:
// (e^{-b_S w - b_M (E_max - E(m))} - e^{-b_M E(m)}) / (Z_S Z_M).
// Positive exactly for swappable m.
double swap_gain(const MachineSpec& spec, const BitString& m);

// Sum of swap_gain over `members`, accumulated smallest first.
double total_gain(const MachineSpec& spec, std::span<const BitString> members);

// Exact optimum plus all bounds.
CoolingReport delta_p0(const MachineSpec& spec);

// Single exchange |0_S 1^n> <-> |1_S 0^n>, clamped at 0.
double bound_virtual(const MachineSpec& spec);

// Closed form for exchanging the fixed family {i 1^k : i != 0}, k = floor(n/2).
// Applicable only when (T_M/T_S) w < gamma_1.
std::optional<double> bound_fixed(const MachineSpec& spec);

// Anchor a = 1^{2l-n}(01)^{n-l} for the smallest admissible l, widened to
// (01)^{n/2} for even n inside the small-w window. nullopt when no l fits.
std::optional<BitString> adaptive_anchor(const MachineSpec& spec);

// Gain of exchanging every string above the adaptive anchor; 0 without one.
double bound_adaptive(const MachineSpec& spec);

}  // namespace qcool

#endif  // QCOOL_COOLING_H_
