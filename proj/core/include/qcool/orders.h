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

#ifndef QCOOL_ORDERS_H_
#define QCOOL_ORDERS_H_

#include <vector>

#include "qcool/bitstring.h"
#include "qcool/machine.h"

namespace qcool {

// Largest n for which the Gamma-independent sets are enumerated.
inline constexpr int kMaxOrderEnumeration = 16;

// a^k = 1^{2k-n} (01)^{n-k}, defined for ceil(n/2) <= k <= n.
BitString order_anchor(int n, int k);

// Gamma-independent sets of machine levels.
struct TheoremSets {
  int n = 0;
  int ell = 0;
  BitString anchor;
  std::vector<BitString> minimal_set;  // always swappable inside the window
  std::vector<BitString> never_set;    // never swappable
};

// {j : conj(j) >= j}. Throws ValidationError for n outside [1, 24] and
// UsageError above kMaxOrderEnumeration.
std::vector<BitString> never_swappable_set(int n);

// upset(a^k) with k = floor(n/2 + ell + 1), plus the never set.
// -1 <= ell <= floor((n-1)/2); ell = -1 requires even n.
TheoremSets minimal_swappable_set(int n, int ell);

// Upper end of the w window in which minimal_set(n, ell) is contained in the
// swappable set: sum of the first L gaps (L = 2(ell+1) for even n, 2 ell + 1
// for odd n), or min(g1 + g2, sum_i (g_{2i} - g_{2i-1})) for ell = -1.
// Compare against (T_M/T_S) w.
double minimal_set_window(const MachineSpec& spec, int ell);

}  // namespace qcool

#endif  // QCOOL_ORDERS_H_
