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

#include "qcool/matching.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

#include "qcool/errors.h"

namespace qcool {
namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

BipartiteCoolingGraph build_graph(const MachineSpec& spec) {
  BipartiteCoolingGraph g;
  g.width = spec.n() + 1;
  for (const auto& i : swappable_set(spec).members) {
    g.left.push_back(BitString::joint(0, i));
    g.right.push_back(BitString::joint(1, conjugate(i)));
  }
  return g;
}

const char* to_string(CostKind kind) {
  return kind == CostKind::kHamming ? "hamming" : "energy";
}

CostKind parse_cost_kind(const std::string& name) {
  if (name == "hamming") return CostKind::kHamming;
  if (name == "energy") return CostKind::kEnergy;
  throw ValidationError("cost", "unknown cost '" + name +
                                    "' (expected hamming or energy)");
}

CostFunction hamming_cost() {
  return [](const BitString& a, const BitString& b) {
    return static_cast<double>(hamming_distance(a, b));
  };
}

CostFunction energy_cost(const MachineSpec& spec) {
  return [spec](const BitString& a, const BitString& b) {
    return hamming_distance(a, b) * (energy(spec, a) - energy(spec, b));
  };
}

CostMatrix::CostMatrix(const std::vector<std::vector<double>>& rows,
                       std::string kind)
    : size_(rows.size()), kind_(std::move(kind)) {
  if (rows.empty()) throw UsageError("cost matrix must not be empty");
  entries_.reserve(size_ * size_);
  for (const auto& row : rows) {
    if (row.size() != size_) {
      throw UsageError("cost matrix must be square: got a row of length " +
                       std::to_string(row.size()) + " in a " +
                       std::to_string(size_) + "-row matrix");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw UsageError("cost matrix entries must be finite");
      entries_.push_back(v);
    }
  }
}

std::vector<std::vector<double>> CostMatrix::to_rows() const {
  std::vector<std::vector<double>> out(size_);
  for (std::size_t r = 0; r < size_; ++r) {
    out[r].assign(entries_.begin() + static_cast<std::ptrdiff_t>(r * size_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * size_));
  }
  return out;
}

CostMatrix cost_matrix(const BipartiteCoolingGraph& graph,
                       const CostFunction& cost, std::string kind) {
  if (graph.empty()) {
    throw UsageError("cost_matrix: the graph is empty (machine cannot cool)");
  }
  CostMatrix m;
  m.size_ = graph.size();
  m.kind_ = std::move(kind);
  m.rows_ = graph.right;
  m.cols_ = graph.left;
  m.entries_.reserve(m.size_ * m.size_);
  for (const auto& b : graph.right) {
    for (const auto& a : graph.left) {
      const double c = cost(a, b);
      if (!std::isfinite(c)) throw UsageError("cost function returned a non-finite value");
      m.entries_.push_back(c);
    }
  }
  return m;
}

CostMatrix cost_matrix(const BipartiteCoolingGraph& graph, CostKind kind,
                       const MachineSpec& spec) {
  if (kind == CostKind::kHamming) {
    return cost_matrix(graph, hamming_cost(), "hamming");
  }
  if (!graph.empty() && graph.width != spec.n() + 1) {
    throw UsageError("energy cost: machine has " + std::to_string(spec.n()) +
                     " qubits but the graph joins " +
                     std::to_string(graph.width) + "-bit levels");
  }
  return cost_matrix(graph, energy_cost(spec), "energy");
}

std::vector<std::pair<BitString, BitString>> Matching::pairs(
    const CostMatrix& matrix) const {
  if (!matrix.labeled()) throw UsageError("matching pairs need a labeled matrix");
  std::vector<std::pair<BitString, BitString>> out;
  for (std::size_t r = 0; r < col_of_row.size(); ++r) {
    out.emplace_back(matrix.col_labels()[col_of_row[r]], matrix.row_labels()[r]);
  }
  return out;
}

double assignment_total(const CostMatrix& matrix,
                        const std::vector<std::size_t>& col_of_row) {
  double total = 0.0;
  for (std::size_t r = 0; r < col_of_row.size(); ++r) {
    total += matrix.at(r, col_of_row[r]);
  }
  return total;
}

Matching hungarian(const CostMatrix& matrix) {
  const std::size_t m = matrix.size();
  if (m == 0) throw UsageError("hungarian: empty matrix");
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) lowest = std::min(lowest, matrix.at(r, c));
  }
  auto cost = [&](std::size_t r, std::size_t c) {
    return matrix.at(r - 1, c - 1) - lowest;
  };

  // Shortest augmenting paths with row/column potentials, 1-based with a
  // virtual column 0.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> row_of_col(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    row_of_col[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = row_of_col[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Matching out;
  out.col_of_row.assign(m, 0);
  for (std::size_t j = 1; j <= m; ++j) out.col_of_row[row_of_col[j] - 1] = j - 1;
  out.total = assignment_total(matrix, out.col_of_row);
  return out;
}

std::vector<Matching> enumerate_optimal(const CostMatrix& matrix,
                                        std::size_t limit) {
  const std::size_t m = matrix.size();
  if (m == 0) throw UsageError("enumerate_optimal: empty matrix");
  if (m > kMaxEnumerationSize) {
    throw UsageError("enumerate_optimal: " + std::to_string(m) +
                     " x " + std::to_string(m) +
                     " is too large for brute force (max " +
                     std::to_string(kMaxEnumerationSize) +
                     "); use hungarian for a single optimum");
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, assignment_total(matrix, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const double slack = 1e-9 * std::max(1.0, std::abs(best));
  std::vector<Matching> out;
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    const double total = assignment_total(matrix, perm);
    if (total - best <= slack) out.push_back({perm, total});
  } while (out.size() < limit && std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string graph_to_dot(const BipartiteCoolingGraph& graph,
                         const CostMatrix* matrix, const Matching* matching) {
  std::ostringstream os;
  os << "graph cooling {\n  rankdir=LR;\n";
  os << "  subgraph cluster_A {\n    label=\"ground\";\n";
  for (const auto& a : graph.left) os << "    \"" << a.str() << "\";\n";
  os << "  }\n  subgraph cluster_B {\n    label=\"excited\";\n";
  for (const auto& b : graph.right) os << "    \"" << b.str() << "\";\n";
  os << "  }\n";
  const bool weighted = matrix != nullptr && matrix->size() == graph.size();
  for (std::size_t r = 0; r < graph.right.size(); ++r) {
    for (std::size_t c = 0; c < graph.left.size(); ++c) {
      os << "  \"" << graph.left[c].str() << "\" -- \"" << graph.right[r].str()
         << "\"";
      std::vector<std::string> attrs;
      if (weighted) attrs.push_back("label=\"" + short_number(matrix->at(r, c)) + "\"");
      if (weighted && matching != nullptr &&
          matching->col_of_row.size() == graph.size() &&
          matching->col_of_row[r] == c) {
        attrs.emplace_back("color=red");
        attrs.emplace_back("penwidth=2");
      }
      if (!attrs.empty()) {
        os << " [";
        for (std::size_t k = 0; k < attrs.size(); ++k) {
          os << (k ? ", " : "") << attrs[k];
        }
        os << "]";
      }
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string hypercube_to_dot(const MachineSpec& spec) {
  const int n = spec.n();
  if (n > 10) throw UsageError("hypercube export is limited to n <= 10");
  const int width = n + 1;
  const double z = spec.z_system() * spec.z_machine();
  const SwappableSet s = swappable_set(spec);
  std::vector<int> role(std::size_t{1} << width, 0);
  for (const auto& i : s.members) {
    role[BitString::joint(0, i).value()] = 1;
    role[BitString::joint(1, conjugate(i)).value()] = 2;
  }

  std::ostringstream os;
  os << "graph hypercube {\n";
  for (const auto& b : all_strings(width)) {
    const double e_sys = b.system_bit() ? spec.omega() : 0.0;
    const double p = std::exp(-spec.beta_system() * e_sys -
                              spec.beta_machine() *
                                  energy(spec, b.machine_part())) /
                     z;
    os << "  \"" << b.str() << "\" [label=\"" << b.str() << "\\n"
       << short_number(p) << "\"";
    if (role[b.value()] == 1) os << ", color=blue";
    if (role[b.value()] == 2) os << ", color=red";
    os << "];\n";
  }
  for (const auto& b : all_strings(width)) {
    for (int pos = 1; pos <= width; ++pos) {
      if (b.bit(pos) == 0) {
        os << "  \"" << b.str() << "\" -- \"" << b.flipped(pos).str() << "\";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace qcool
