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

#include "support/brute_force.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace qcool::testing {

bool suffix_dominates(const BitString& j, const BitString& k) {
  int cj = 0;
  int ck = 0;
  for (int pos = j.width(); pos >= 1; --pos) {
    cj += j.bit(pos);
    ck += k.bit(pos);
    if (cj < ck) return false;
  }
  return true;
}

std::vector<BitString> upset_by_filter(const BitString& a) {
  std::vector<BitString> out;
  for (std::uint32_t v = 0; v < (1u << a.width()); ++v) {
    BitString j(a.width(), v);
    if (suffix_dominates(j, a)) out.push_back(j);
  }
  return out;
}

namespace {

struct Level {
  long double population;
  bool ground;
  std::uint32_t machine;
};

std::vector<Level> levels(const MachineSpec& spec) {
  const int n = spec.n();
  std::vector<Level> out;
  for (int s = 0; s <= 1; ++s) {
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      long double e = 0.0L;
      for (int pos = 1; pos <= n; ++pos) {
        if ((m >> (n - pos)) & 1u) e += spec.gaps()[static_cast<std::size_t>(pos - 1)];
      }
      const long double x = -static_cast<long double>(spec.beta_machine()) * e -
                            (s ? static_cast<long double>(spec.beta_system()) *
                                     spec.omega()
                               : 0.0L);
      out.push_back({std::exp(x), s == 0, m});
    }
  }
  long double z = 0.0L;
  for (const auto& l : out) z += l.population;
  for (auto& l : out) l.population /= z;
  std::stable_sort(out.begin(), out.end(), [](const Level& a, const Level& b) {
    return a.population > b.population;
  });
  return out;
}

}  // namespace

long double sorted_ground_population(const MachineSpec& spec) {
  const auto ls = levels(spec);
  long double p = 0.0L;
  for (std::size_t i = 0; i < ls.size() / 2; ++i) p += ls[i].population;
  return p;
}

std::vector<BitString> displaced_ground_levels(const MachineSpec& spec) {
  const auto ls = levels(spec);
  std::vector<BitString> out;
  for (std::size_t i = ls.size() / 2; i < ls.size(); ++i) {
    if (ls[i].ground) out.emplace_back(spec.n(), ls[i].machine);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double brute_force_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t m = cost.size();
  std::vector<bool> used(m, false);
  double best = std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, double)> go = [&](std::size_t row, double acc) {
    if (row == m) {
      best = std::min(best, acc);
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      used[c] = true;
      go(row + 1, acc + cost[row][c]);
      used[c] = false;
    }
  };
  go(0, 0.0);
  return best;
}

std::size_t count_optimal_assignments(
    const std::vector<std::vector<double>>& cost, double best) {
  const std::size_t m = cost.size();
  std::vector<bool> used(m, false);
  std::size_t count = 0;
  std::function<void(std::size_t, double)> go = [&](std::size_t row, double acc) {
    if (row == m) {
      if (std::abs(acc - best) <= 1e-9 * std::max(1.0, std::abs(best))) ++count;
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      used[c] = true;
      go(row + 1, acc + cost[row][c]);
      used[c] = false;
    }
  };
  go(0, 0.0);
  return count;
}

std::vector<std::vector<double>> random_matrix(std::mt19937_64& rng,
                                               std::size_t m, double lo,
                                               double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<std::vector<double>> out(m, std::vector<double>(m));
  for (auto& row : out) {
    for (auto& v : row) v = u(rng);
  }
  return out;
}

std::vector<BitString> parse_all(const std::vector<std::string>& texts) {
  std::vector<BitString> out;
  for (const auto& t : texts) out.push_back(BitString::parse(t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qcool::testing
