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

#include "qcool/machine.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcool/errors.h"

namespace qcool {
namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(field, "must be a positive finite number, got " +
                                     std::to_string(value));
  }
}

double machine_energy(const std::vector<double>& gaps, std::uint32_t value,
                      int width) {
  double e = 0.0;
  for (int pos = 1; pos <= width; ++pos) {
    if ((value >> (width - pos)) & 1u) {
      e += gaps[static_cast<std::size_t>(pos - 1)];
    }
  }
  return e;
}

void require_machine_width(const MachineSpec& spec, const BitString& m,
                           const char* op) {
  if (m.width() != spec.n()) {
    throw UsageError(std::string(op) + ": expected a " +
                     std::to_string(spec.n()) + "-bit machine string, got " +
                     m.str());
  }
}

}  // namespace

const char* to_string(GapFamily f) {
  switch (f) {
    case GapFamily::kExplicit:
      return "explicit";
    case GapFamily::kDegenerate:
      return "degenerate";
    case GapFamily::kLinear:
      return "linear";
    case GapFamily::kExponential:
      return "exponential";
  }
  return "?";
}

GapFamily parse_gap_family(std::string_view name) {
  if (name == "degenerate") return GapFamily::kDegenerate;
  if (name == "linear") return GapFamily::kLinear;
  if (name == "exponential") return GapFamily::kExponential;
  if (name == "explicit") return GapFamily::kExplicit;
  throw ValidationError("family", "unknown family '" + std::string(name) +
                                      "' (expected degenerate, linear or "
                                      "exponential)");
}

std::vector<double> family_gaps(GapFamily family, double gamma, int n) {
  require_positive(gamma, "gamma");
  if (n < 1 || n > kMaxMachineQubits) {
    throw ValidationError("n", "must be in [1, " +
                                   std::to_string(kMaxMachineQubits) + "]");
  }
  if (family == GapFamily::kExplicit) {
    throw ValidationError("family", "explicit machines list their gaps");
  }
  std::vector<double> gaps(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    double g = gamma;
    if (family == GapFamily::kLinear) g = i * gamma;
    if (family == GapFamily::kExponential) g = std::pow(gamma, i);
    gaps[static_cast<std::size_t>(i - 1)] = g;
  }
  return gaps;
}

MachineSpec::MachineSpec(double omega, std::vector<double> gaps)
    : MachineSpec(omega, std::move(gaps), Options{}) {}

MachineSpec::MachineSpec(double omega, std::vector<double> gaps,
                         Options options)
    : omega_(omega),
      original_gaps_(std::move(gaps)),
      t_system_(options.t_system),
      t_machine_(options.t_machine),
      tolerance_(options.tolerance) {
  require_positive(omega_, "omega");
  require_positive(t_system_, "t_system");
  require_positive(t_machine_, "t_machine");
  if (!(tolerance_ >= 0.0) || !std::isfinite(tolerance_)) {
    throw ValidationError("tolerance", "must be a non-negative finite number");
  }
  if (original_gaps_.empty()) {
    throw ValidationError("gaps", "machine needs at least one qubit");
  }
  if (original_gaps_.size() > static_cast<std::size_t>(kMaxMachineQubits)) {
    throw ValidationError("gaps", "at most " +
                                      std::to_string(kMaxMachineQubits) +
                                      " machine qubits are supported");
  }
  for (double g : original_gaps_) require_positive(g, "gaps");

  sort_permutation_.resize(original_gaps_.size());
  std::iota(sort_permutation_.begin(), sort_permutation_.end(), std::size_t{0});
  std::stable_sort(sort_permutation_.begin(), sort_permutation_.end(),
                   [&](std::size_t a, std::size_t b) {
                     return original_gaps_[a] < original_gaps_[b];
                   });
  gaps_.reserve(original_gaps_.size());
  for (std::size_t idx : sort_permutation_) gaps_.push_back(original_gaps_[idx]);
  for (double g : gaps_) e_max_ += g;
  family_gamma_ = gaps_.front();
}

MachineSpec MachineSpec::from_family(GapFamily family, double gamma, int n,
                                     double omega) {
  return from_family(family, gamma, n, omega, Options{});
}

MachineSpec MachineSpec::from_family(GapFamily family, double gamma, int n,
                                     double omega, Options options) {
  MachineSpec spec(omega, family_gaps(family, gamma, n), options);
  spec.family_ = family;
  spec.family_gamma_ = gamma;
  return spec;
}

bool MachineSpec::was_reordered() const {
  for (std::size_t i = 0; i < sort_permutation_.size(); ++i) {
    if (sort_permutation_[i] != i) return true;
  }
  return false;
}

double MachineSpec::z_system() const {
  return 1.0 + std::exp(-beta_system() * omega_);
}

double MachineSpec::z_machine() const {
  double z = 1.0;
  for (double g : gaps_) z *= 1.0 + std::exp(-beta_machine() * g);
  return z;
}

double energy(const MachineSpec& spec, const BitString& m) {
  if (m.width() == spec.n()) {
    return machine_energy(spec.gaps(), m.value(), m.width());
  }
  if (m.width() == spec.n() + 1) {
    const double e =
        machine_energy(spec.gaps(), m.machine_part().value(), spec.n());
    return m.system_bit() ? e + spec.omega() : e;
  }
  throw UsageError("energy: string " + m.str() + " has width " +
                   std::to_string(m.width()) + ", expected " +
                   std::to_string(spec.n()) + " or " +
                   std::to_string(spec.n() + 1));
}

double threshold(const MachineSpec& spec) {
  return 0.5 * (spec.scaled_omega() + spec.e_max());
}

double threshold_slack(const MachineSpec& spec) {
  return spec.tolerance() * std::max(1.0, std::abs(threshold(spec)));
}

bool is_swappable(const MachineSpec& spec, const BitString& m) {
  require_machine_width(spec, m, "is_swappable");
  return energy(spec, m) - threshold(spec) > threshold_slack(spec);
}

bool SwappableSet::contains(const BitString& m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

SwappableSet swappable_set(const MachineSpec& spec) {
  SwappableSet out;
  out.threshold = threshold(spec);
  const double slack = threshold_slack(spec);
  const int n = spec.n();
  const std::uint32_t count = 1u << n;
  for (std::uint32_t v = 0; v < count; ++v) {
    if (machine_energy(spec.gaps(), v, n) - out.threshold > slack) {
      out.members.emplace_back(n, v);
    }
  }
  return out;
}

bool cools(const MachineSpec& spec, const BitString& i, const BitString& j) {
  require_machine_width(spec, i, "cools");
  require_machine_width(spec, j, "cools");
  const double gain = energy(spec, i) - energy(spec, j);
  const double tau = spec.scaled_omega();
  return gain - tau > spec.tolerance() * std::max(1.0, std::abs(tau));
}

double carnot_margin(const MachineSpec& spec, const BitString& i,
                     const BitString& j) {
  require_machine_width(spec, i, "carnot_margin");
  require_machine_width(spec, j, "carnot_margin");
  return (spec.omega() - (energy(spec, i) - energy(spec, j))) / spec.omega();
}

}  // namespace qcool
