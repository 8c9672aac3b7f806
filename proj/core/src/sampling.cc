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

#include "qcool/sampling.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qcool/errors.h"

namespace qcool {
namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

}  // namespace

MachineSpec sample_machine(std::mt19937_64& rng, const SamplingOptions& opts) {
  if (opts.min_n < 1 || opts.max_n > kMaxMachineQubits || opts.min_n > opts.max_n) {
    throw UsageError("sample_machine: bad qubit range");
  }
  if (!(opts.min_gap > 0.0) || !(opts.max_gap >= opts.min_gap)) {
    throw UsageError("sample_machine: bad gap range");
  }
  std::uniform_int_distribution<int> pick_n(opts.min_n, opts.max_n);
  const int n = pick_n(rng);
  std::vector<double> gaps(static_cast<std::size_t>(n));
  for (auto& g : gaps) g = log_uniform(rng, opts.min_gap, opts.max_gap);
  const double g1 = *std::min_element(gaps.begin(), gaps.end());
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  const double omega = g1 * (1.0 - frac(rng));  // (0, g1]

  MachineSpec::Options o;
  if (opts.random_temperatures) {
    o.t_machine = log_uniform(rng, 0.5, 2.0);
    o.t_system = o.t_machine * log_uniform(rng, 1.0, 4.0);
  }
  return MachineSpec(omega, std::move(gaps), o);
}

}  // namespace qcool
