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

#ifndef QCOOL_TOOLS_CLI_H_
#define QCOOL_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcool/machine.h"

namespace qcool::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitMismatch = 2;

// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline constexpr const char* kCsvHeader =
    "n,family,gamma,omega,delta_p0,bound_virtual,bound_fixed,fixed_applicable,"
    "bound_adaptive,swappable_count,reducibility_order";

struct SweepRow {
  int n = 0;
  std::string family;
  double gamma = 0.0;
  double omega = 0.0;
  double delta_p0 = 0.0;
  double bound_virtual = 0.0;
  double bound_fixed = 0.0;  // 0 when not applicable
  bool fixed_applicable = false;
  double bound_adaptive = 0.0;
  std::size_t swappable_count = 0;
  int reducibility_order = 0;
};

SweepRow evaluate_row(const MachineSpec& spec);
std::string format_row(const SweepRow& row);

// Evaluates every spec, possibly in parallel; rows keep the input order.
std::vector<SweepRow> evaluate_rows(const std::vector<MachineSpec>& specs);

// %.12g
std::string format_number(double v);

struct VerifyOptions {
  int max_n = 8;
  int trials = 1000;
  std::uint64_t seed = 7;
  bool random_temperatures = false;
  int max_report = 10;
};

struct VerifyOutcome {
  std::string report;  // JSON
  bool ok = true;
};

VerifyOutcome run_verify(const VerifyOptions& options);

}  // namespace qcool::cli

#endif  // QCOOL_TOOLS_CLI_H_
