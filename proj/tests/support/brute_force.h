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

// Slow reference implementations used only by the tests. None of them share
// code with the library beyond BitString/MachineSpec accessors.

#ifndef QCOOL_TESTS_SUPPORT_BRUTE_FORCE_H_
#define QCOOL_TESTS_SUPPORT_BRUTE_FORCE_H_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "qcool/bitstring.h"
#include "qcool/machine.h"

namespace qcool::testing {

// j >= k iff every suffix of j holds at least as many ones as the same
// suffix of k.
bool suffix_dominates(const BitString& j, const BitString& k);

// {j : suffix_dominates(j, a)}, ascending.
std::vector<BitString> upset_by_filter(const BitString& a);

// Sum of the 2^n largest joint populations, in long double.
long double sorted_ground_population(const MachineSpec& spec);

// Machine strings whose ground level loses its place in the top half.
std::vector<BitString> displaced_ground_levels(const MachineSpec& spec);

// Minimum over all m! assignments, by recursion over rows.
double brute_force_assignment(const std::vector<std::vector<double>>& cost);

// Number of assignments attaining `best` within 1e-9.
std::size_t count_optimal_assignments(
    const std::vector<std::vector<double>>& cost, double best);

std::vector<std::vector<double>> random_matrix(std::mt19937_64& rng,
                                               std::size_t m, double lo,
                                               double hi);

std::vector<BitString> parse_all(const std::vector<std::string>& texts);

}  // namespace qcool::testing

#endif  // QCOOL_TESTS_SUPPORT_BRUTE_FORCE_H_
