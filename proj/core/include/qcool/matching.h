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

#ifndef QCOOL_MATCHING_H_
#define QCOOL_MATCHING_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcool/bitstring.h"
#include "qcool/machine.h"

namespace qcool {

// Complete bipartite graph between the disordered ground levels
// A = {0_S i : i swappable} and their partners B = {1_S conj(i)}. Index r of
// `right` is the partner of index r of `left`; both follow ascending i.
struct BipartiteCoolingGraph {
  int width = 0;  // joint width n + 1
  std::vector<BitString> left;
  std::vector<BitString> right;

  std::size_t size() const noexcept { return left.size(); }
  bool empty() const noexcept { return left.empty(); }
};

BipartiteCoolingGraph build_graph(const MachineSpec& spec);

// Cost of pairing column a (from A) with row b (from B).
using CostFunction =
    std::function<double(const BitString& a, const BitString& b)>;

enum class CostKind { kHamming, kEnergy };

const char* to_string(CostKind kind);
CostKind parse_cost_kind(const std::string& name);

// D_H(a, b).
CostFunction hamming_cost();
// D_H(a, b) * (E(a) - E(b)) with joint energies from `spec`. Signed.
CostFunction energy_cost(const MachineSpec& spec);

// Square matrix; rows are B elements, columns are A elements.
class CostMatrix {
 public:
  CostMatrix() = default;

  // Throws UsageError unless the rows form a non-empty square matrix of
  // finite entries.
  explicit CostMatrix(const std::vector<std::vector<double>>& rows,
                      std::string kind = "custom");

  std::size_t size() const noexcept { return size_; }
  double at(std::size_t row, std::size_t col) const {
    return entries_[row * size_ + col];
  }
  const std::string& kind() const noexcept { return kind_; }

  // Joint-string labels, empty for unlabeled matrices.
  const std::vector<BitString>& row_labels() const noexcept { return rows_; }
  const std::vector<BitString>& col_labels() const noexcept { return cols_; }
  bool labeled() const noexcept { return !rows_.empty(); }

  std::vector<std::vector<double>> to_rows() const;

  friend CostMatrix cost_matrix(const BipartiteCoolingGraph& graph,
                                const CostFunction& cost, std::string kind);

 private:
  std::size_t size_ = 0;
  std::vector<double> entries_;
  std::vector<BitString> rows_;
  std::vector<BitString> cols_;
  std::string kind_;
};

// Throws UsageError on an empty graph.
CostMatrix cost_matrix(const BipartiteCoolingGraph& graph,
                       const CostFunction& cost, std::string kind);
CostMatrix cost_matrix(const BipartiteCoolingGraph& graph, CostKind kind,
                       const MachineSpec& spec);

// Perfect matching: col_of_row[r] is the column assigned to row r.
struct Matching {
  std::vector<std::size_t> col_of_row;
  double total = 0.0;

  // Pairs (a, b) = (column label, row label) of a labeled matrix, in row order.
  std::vector<std::pair<BitString, BitString>> pairs(
      const CostMatrix& matrix) const;
};

// Minimum-total assignment in O(m^3). Deterministic.
Matching hungarian(const CostMatrix& matrix);

inline constexpr std::size_t kMaxEnumerationSize = 8;

// Every assignment attaining the minimum total (relative tolerance 1e-9), in
// lexicographic order of col_of_row, at most `limit` of them. Throws
// UsageError for matrices larger than kMaxEnumerationSize.
std::vector<Matching> enumerate_optimal(const CostMatrix& matrix,
                                        std::size_t limit = 1000);

// Total of an arbitrary assignment.
double assignment_total(const CostMatrix& matrix,
                        const std::vector<std::size_t>& col_of_row);

// DOT rendering of the bipartite graph; matched edges are drawn bold when a
// matching over `matrix` is given.
std::string graph_to_dot(const BipartiteCoolingGraph& graph,
                         const CostMatrix* matrix = nullptr,
                         const Matching* matching = nullptr);

// DOT rendering of the (n+1)-cube of joint levels with their populations.
// Swappable ground levels and their partners are highlighted. n <= 10.
std::string hypercube_to_dot(const MachineSpec& spec);

}  // namespace qcool

#endif  // QCOOL_MATCHING_H_
