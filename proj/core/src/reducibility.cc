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

#include "qcool/reducibility.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qcool/errors.h"

namespace qcool {
namespace {

std::vector<bool> membership(const MachineSpec& spec) {
  std::vector<bool> in(std::size_t{1} << spec.n(), false);
  for (const auto& m : swappable_set(spec).members) in[m.value()] = true;
  return in;
}

}  // namespace

int reducibility_order(const MachineSpec& spec) {
  const int n = spec.n();
  const std::vector<bool> in = membership(spec);
  bool any = false;
  for (bool b : in) any = any || b;
  if (!any) return n;

  int order = 0;
  for (int pos = 1; pos <= n; ++pos) {
    const std::uint32_t mask = 1u << (n - pos);
    for (std::uint32_t v = 0; v < in.size(); ++v) {
      if (in[v] && !in[v ^ mask]) return order;
    }
    ++order;
  }
  return order;
}

IrreducibilityResult is_irreducible(const MachineSpec& spec) {
  const int n = spec.n();
  IrreducibilityResult out;
  if (n == 1) {
    const auto one = BitString::ones(1);
    out.irreducible = is_swappable(spec, one) &&
                      !is_swappable(spec, BitString::zeros(1));
    return out;
  }
  const std::uint32_t top = 1u << (n - 1);
  double best = 0.0;
  for (std::uint32_t l = 0; l < top; ++l) {
    const BitString hi(n, top | l);
    const BitString lo(n, l);
    if (!is_swappable(spec, hi) || is_swappable(spec, lo)) continue;
    const double e = energy(spec, lo);
    if (!out.witness || e < best) {
      out.witness = BitString(n - 1, l);
      best = e;
    }
  }
  out.irreducible = out.witness.has_value();
  return out;
}

bool is_n_minus_1_reducible(const MachineSpec& spec) {
  return spec.gap(spec.n()) - threshold(spec) > threshold_slack(spec);
}

DegenerateIrreducibility degenerate_irreducibility(int n, double gamma,
                                                   double tau_omega) {
  if (n < 1 || n > kMaxMachineQubits) {
    throw ValidationError("n", "must be in [1, " +
                                   std::to_string(kMaxMachineQubits) + "]");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ValidationError("gamma", "must be a positive finite number");
  }
  if (!(tau_omega >= 0.0) || !std::isfinite(tau_omega)) {
    throw ValidationError("tau_omega", "must be a non-negative finite number");
  }
  const double slack = kDefaultTolerance * std::max(1.0, n * gamma);
  for (int t = 0; t < n; ++t) {
    const double lo = -(n - 2 * t) * gamma;
    if (lo - slack <= tau_omega && tau_omega <= 2.0 * gamma + lo + slack) {
      return {true, t};
    }
  }
  return {};
}

ReducibilityReport analyze_reducibility(const MachineSpec& spec) {
  ReducibilityReport r;
  r.cannot_cool = swappable_set(spec).empty();
  r.order = reducibility_order(spec);
  const auto irr = is_irreducible(spec);
  r.irreducible = irr.irreducible;
  r.witness = irr.witness;
  r.n_minus_1_reducible = is_n_minus_1_reducible(spec);
  return r;
}

}  // namespace qcool
