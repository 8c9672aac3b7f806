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

#include "qcool/cooling.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qcool/orders.h"

namespace qcool {
namespace {

double sorted_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

double prefix_gap_sum(const MachineSpec& spec, int count) {
  double s = 0.0;
  for (int i = 1; i <= count; ++i) s += spec.gap(i);
  return s;
}

}  // namespace

double swap_gain(const MachineSpec& spec, const BitString& m) {
  const double e = energy(spec, m);
  const double bs = spec.beta_system();
  const double bm = spec.beta_machine();
  const double up = std::exp(-bs * spec.omega() - bm * (spec.e_max() - e));
  const double down = std::exp(-bm * e);
  return (up - down) / (spec.z_system() * spec.z_machine());
}

double total_gain(const MachineSpec& spec, std::span<const BitString> members) {
  const double bs = spec.beta_system();
  const double bm = spec.beta_machine();
  const double z = spec.z_system() * spec.z_machine();
  std::vector<double> terms;
  terms.reserve(members.size());
  for (const auto& m : members) {
    const double e = energy(spec, m);
    terms.push_back(
        (std::exp(-bs * spec.omega() - bm * (spec.e_max() - e)) -
         std::exp(-bm * e)) / z);
  }
  return sorted_sum(std::move(terms));
}

CoolingReport delta_p0(const MachineSpec& spec) {
  CoolingReport r;
  r.z_system = spec.z_system();
  r.z_machine = spec.z_machine();
  r.p0_initial = 1.0 / r.z_system;
  const SwappableSet s = swappable_set(spec);
  r.swappable_count = s.size();
  r.delta_p0 = std::max(0.0, total_gain(spec, s.members));
  r.p0_final = r.p0_initial + r.delta_p0;
  r.bound_virtual = bound_virtual(spec);
  r.bound_fixed = bound_fixed(spec);
  r.bound_adaptive = bound_adaptive(spec);
  return r;
}

double bound_virtual(const MachineSpec& spec) {
  const double num = std::exp(-spec.beta_system() * spec.omega()) -
                     std::exp(-spec.beta_machine() * spec.e_max());
  return std::max(0.0, num / (spec.z_system() * spec.z_machine()));
}

std::optional<double> bound_fixed(const MachineSpec& spec) {
  if (!(spec.scaled_omega() < spec.gap(1))) return std::nullopt;
  const int n = spec.n();
  const int k_tilde = n % 2 == 0 ? n / 2 + 1 : (n + 3) / 2;
  const double bs = spec.beta_system();
  const double bm = spec.beta_machine();
  double e_tail = 0.0;
  double z_tail = 1.0;
  for (int i = k_tilde; i <= n; ++i) {
    e_tail += spec.gap(i);
    z_tail *= 1.0 + std::exp(-bm * spec.gap(i));
  }
  const double zs = spec.z_system();
  const double zm = spec.z_machine();
  const double term1 =
      (std::exp(-bs * spec.omega()) - std::exp(-bm * e_tail)) / (zs * z_tail);
  const double term2 =
      (std::exp(-bm * e_tail) -
       std::exp(-bs * spec.omega() - bm * (spec.e_max() - e_tail))) /
      (zs * zm);
  return term1 + term2;
}

std::optional<BitString> adaptive_anchor(const MachineSpec& spec) {
  const int n = spec.n();
  const double tau = spec.scaled_omega();
  if (n % 2 == 0 && tau < minimal_set_window(spec, -1)) {
    return order_anchor(n, n / 2);
  }
  for (int l = (n + 2) / 2; l <= n; ++l) {
    if (tau < prefix_gap_sum(spec, 2 * l - n)) return order_anchor(n, l);
  }
  return std::nullopt;
}

double bound_adaptive(const MachineSpec& spec) {
  const auto anchor = adaptive_anchor(spec);
  if (!anchor) return 0.0;
  return total_gain(spec, upset(*anchor));
}

}  // namespace qcool
