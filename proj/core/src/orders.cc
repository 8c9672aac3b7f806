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

#include "qcool/orders.h"

#include <algorithm>
#include <string>

#include "qcool/errors.h"

namespace qcool {
namespace {

void require_order_width(int n) {
  if (n < 1 || n > kMaxMachineQubits) {
    throw ValidationError("n", "must be in [1, " +
                                   std::to_string(kMaxMachineQubits) + "]");
  }
  if (n > kMaxOrderEnumeration) {
    throw UsageError("set enumeration is capped at n = " +
                     std::to_string(kMaxOrderEnumeration));
  }
}

}  // namespace

BitString order_anchor(int n, int k) {
  if (n < 1 || n > kMaxWidth || 2 * k < n || k > n) {
    throw UsageError("order_anchor: need ceil(n/2) <= k <= n, got n = " +
                     std::to_string(n) + ", k = " + std::to_string(k));
  }
  std::string text(static_cast<std::size_t>(2 * k - n), '1');
  for (int i = 0; i < n - k; ++i) text += "01";
  return BitString::parse(text);
}

std::vector<BitString> never_swappable_set(int n) {
  require_order_width(n);
  std::vector<BitString> out;
  for (const auto& j : all_strings(n)) {
    if (lex_geq(conjugate(j), j)) out.push_back(j);
  }
  return out;
}

TheoremSets minimal_swappable_set(int n, int ell) {
  require_order_width(n);
  if (ell < -1 || ell > (n - 1) / 2) {
    throw ValidationError("ell", "must be in [-1, " +
                                     std::to_string((n - 1) / 2) + "] for n = " +
                                     std::to_string(n));
  }
  if (ell == -1 && n % 2 != 0) {
    throw ValidationError("ell", "ell = -1 is only defined for even n");
  }
  TheoremSets sets;
  sets.n = n;
  sets.ell = ell;
  // floor(n/2 + ell + 1) in integers.
  const int k = (n + 2 * ell + 2) / 2;
  sets.anchor = order_anchor(n, k);
  sets.minimal_set = upset(sets.anchor);
  sets.never_set = never_swappable_set(n);
  return sets;
}

double minimal_set_window(const MachineSpec& spec, int ell) {
  const int n = spec.n();
  if (ell == -1) {
    if (n % 2 != 0 || n < 2) {
      throw ValidationError("ell", "ell = -1 is only defined for even n");
    }
    // E(j) - E(conj j) over the weight-n/2 part of the set is smallest at
    // (01)^{n/2}.
    double pairs = 0.0;
    for (int i = 2; i <= n; i += 2) pairs += spec.gap(i) - spec.gap(i - 1);
    return std::min(spec.gap(1) + spec.gap(2), pairs);
  }
  if (ell < -1 || ell > (n - 1) / 2) {
    throw ValidationError("ell", "out of range for n = " + std::to_string(n));
  }
  const int len = n % 2 == 0 ? 2 * (ell + 1) : 2 * ell + 1;
  double s = 0.0;
  for (int i = 1; i <= len; ++i) s += spec.gap(i);
  return s;
}

}  // namespace qcool
