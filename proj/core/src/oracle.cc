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

#include "qcool/oracle.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcool/errors.h"

namespace qcool {
namespace {

double sorted_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

SortCoolResult summarize(const PopulationVector& before,
                         const std::vector<bool>& ground_changed,
                         std::vector<double> ground_values) {
  SortCoolResult r;
  r.p0_final = sorted_sum(std::move(ground_values));
  const int n = before.width - 1;
  for (std::uint32_t i = 0; i < ground_changed.size(); ++i) {
    if (ground_changed[i]) r.swapped.emplace_back(n, i);
  }
  return r;
}

}  // namespace

double PopulationVector::at(const BitString& joint) const {
  if (joint.width() != width) {
    throw UsageError("population lookup width mismatch for " + joint.str());
  }
  return values[joint.value()];
}

double PopulationVector::total() const { return sorted_sum(values); }

PopulationVector joint_populations(const MachineSpec& spec) {
  const int n = spec.n();
  if (n > kMaxOracleQubits) {
    throw UsageError("the population oracle is limited to n <= " +
                     std::to_string(kMaxOracleQubits));
  }
  PopulationVector p;
  p.width = n + 1;
  const std::size_t half = std::size_t{1} << n;
  p.values.resize(2 * half);
  const double z = spec.z_system() * spec.z_machine();
  const double bs = spec.beta_system();
  const double bm = spec.beta_machine();
  for (std::uint32_t i = 0; i < half; ++i) {
    const double e = energy(spec, BitString(n, i));
    p.values[i] = std::exp(-bm * e) / z;
    p.values[half + i] = std::exp(-bs * spec.omega() - bm * e) / z;
  }
  return p;
}

SortCoolResult sort_cool(const PopulationVector& populations) {
  const std::size_t total = populations.values.size();
  const std::size_t half = total / 2;
  std::vector<std::uint32_t> order(total);
  std::iota(order.begin(), order.end(), 0u);
  // Larger first; on ties the ground level (smaller index) wins, which keeps
  // ground entries in place and leaves excited ones where they are.
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return populations.values[a] > populations.values[b];
  });
  std::vector<bool> top(total, false);
  std::vector<double> ground_values;
  ground_values.reserve(half);
  for (std::size_t r = 0; r < half; ++r) {
    top[order[r]] = true;
    ground_values.push_back(populations.values[order[r]]);
  }
  std::vector<bool> changed(half, false);
  for (std::size_t i = 0; i < half; ++i) changed[i] = !top[i];
  return summarize(populations, changed, std::move(ground_values));
}

SortCoolResult sort_cool_iterative(const PopulationVector& populations) {
  std::vector<double> v = populations.values;
  const std::size_t half = v.size() / 2;
  std::vector<bool> changed(half, false);
  while (true) {
    const auto lo = std::min_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(half));
    const auto hi = std::max_element(v.begin() + static_cast<std::ptrdiff_t>(half), v.end());
    if (!(*hi > *lo)) break;
    std::iter_swap(lo, hi);
    changed[static_cast<std::size_t>(lo - v.begin())] = true;
  }
  v.resize(half);
  return summarize(populations, changed, std::move(v));
}

PopulationVector apply_tlps(const PopulationVector& populations,
                            const std::vector<TwoLevelPermutation>& tlps) {
  PopulationVector out = populations;
  for (const auto& t : tlps) {
    if (t.width() != populations.width) {
      throw UsageError("transposition width " + std::to_string(t.width()) +
                       " does not match populations of width " +
                       std::to_string(populations.width));
    }
    std::swap(out.values[t.j().value()], out.values[t.k().value()]);
  }
  return out;
}

PopulationVector apply_circuit(const PopulationVector& populations,
                               const Circuit& circuit) {
  if (circuit.width != populations.width) {
    throw UsageError("circuit width does not match populations");
  }
  const auto table = permutation_table(circuit);
  PopulationVector out;
  out.width = populations.width;
  out.values.assign(populations.values.size(), 0.0);
  for (std::size_t v = 0; v < table.size(); ++v) {
    out.values[table[v]] = populations.values[v];
  }
  return out;
}

double system_ground_population(const PopulationVector& populations) {
  const std::size_t half = populations.values.size() / 2;
  return sorted_sum(std::vector<double>(
      populations.values.begin(),
      populations.values.begin() + static_cast<std::ptrdiff_t>(half)));
}

}  // namespace qcool
