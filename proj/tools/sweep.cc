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

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "cli.h"
#include "qcool/cooling.h"
#include "qcool/reducibility.h"

namespace qcool::cli {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

SweepRow evaluate_row(const MachineSpec& spec) {
  const CoolingReport r = delta_p0(spec);
  SweepRow row;
  row.n = spec.n();
  row.family = to_string(spec.family());
  row.gamma = spec.family_gamma();
  row.omega = spec.omega();
  row.delta_p0 = r.delta_p0;
  row.bound_virtual = r.bound_virtual;
  row.fixed_applicable = r.bound_fixed.has_value();
  row.bound_fixed = r.bound_fixed.value_or(0.0);
  row.bound_adaptive = r.bound_adaptive;
  row.swappable_count = r.swappable_count;
  row.reducibility_order = reducibility_order(spec);
  return row;
}

std::string format_row(const SweepRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.family << ',' << format_number(row.gamma) << ','
     << format_number(row.omega) << ',' << format_number(row.delta_p0) << ','
     << format_number(row.bound_virtual) << ',' << format_number(row.bound_fixed)
     << ',' << (row.fixed_applicable ? "true" : "false") << ','
     << format_number(row.bound_adaptive) << ',' << row.swappable_count << ','
     << row.reducibility_order;
  return os.str();
}

std::vector<SweepRow> evaluate_rows(const std::vector<MachineSpec>& specs) {
  std::vector<SweepRow> rows(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        rows[i] = evaluate_row(specs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(
      std::min(std::thread::hardware_concurrency(), 8u), 1,
      std::max<std::size_t>(specs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace qcool::cli
