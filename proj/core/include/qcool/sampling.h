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

#ifndef QCOOL_SAMPLING_H_
#define QCOOL_SAMPLING_H_

#include <random>

#include "qcool/machine.h"

namespace qcool {

// Random machines for property checks. All draws come from the caller's
// std::mt19937_64, so a seed reproduces the sequence.
struct SamplingOptions {
  int min_n = 1;
  int max_n = 8;
  double min_gap = 0.1;  // gaps are log-uniform on [min_gap, max_gap]
  double max_gap = 10.0;
  bool random_temperatures = false;  // otherwise T_S = T_M = 1
};

// n uniform on [min_n, max_n]; omega uniform on (0, gamma_1]. With random
// temperatures, T_M is log-uniform on [0.5, 2] and T_S on [T_M, 4 T_M].
MachineSpec sample_machine(std::mt19937_64& rng, const SamplingOptions& opts);

}  // namespace qcool

#endif  // QCOOL_SAMPLING_H_
