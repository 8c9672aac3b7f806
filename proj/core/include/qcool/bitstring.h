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

#ifndef QCOOL_BITSTRING_H_
#define QCOOL_BITSTRING_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcool {

inline constexpr int kMaxWidth = 25;  // n machine qubits (<= 24) + system bit

// Fixed-width bit string b_1 b_2 ... b_n. Position 1 is the leftmost character
// and, for machine strings, labels the warmest qubit (smallest gap). The
// numeric value stores b_1 as its most significant bit, so numeric order and
// textual (dictionary) order coincide.
class BitString {
 public:
  constexpr BitString() = default;

  // Throws UsageError unless 1 <= width <= kMaxWidth and value < 2^width.
  BitString(int width, std::uint32_t value);

  // All-zeros and all-ones strings.
  static BitString zeros(int width);
  static BitString ones(int width);

  // Parses "0101". Throws UsageError on any other character or bad length.
  static BitString parse(std::string_view text);

  // Joint string |i_S i_M>: system bit prepended to a machine string.
  static BitString joint(int system_bit, const BitString& machine);

  int width() const noexcept { return width_; }
  std::uint32_t value() const noexcept { return value_; }

  // Bit at 1-based position `pos` counted from the left.
  int bit(int pos) const;
  BitString with_bit(int pos, int bit) const;
  BitString flipped(int pos) const;

  // Joint strings only: the leading system bit and the trailing machine part.
  int system_bit() const;
  BitString machine_part() const;

  // 1-based positions of the ones, ascending (j(1) < j(2) < ...).
  std::vector<int> one_positions() const;

  std::string str() const;

  // Human rendering of a joint string: "0_S101".
  std::string joint_str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a,
                                          const BitString& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  int width_ = 0;
  std::uint32_t value_ = 0;
};

enum class OrderRelation { kGreater, kLess, kEqual, kIncomparable };

const char* to_string(OrderRelation r);

int hamming_distance(const BitString& a, const BitString& b);
int hamming_weight(const BitString& b);

// Bit-wise complement b (+) 1^n.
BitString conjugate(const BitString& b);

// Lexicographic partial order on equal-width strings. With J = #(j) and
// K = #(k) ones, j >= k iff J >= K and the i-th one of k sits at or left of
// the (i + J - K)-th one of j for every i. Any j >= k with j != k is strict.
// Throws UsageError on width mismatch.
OrderRelation lex_compare(const BitString& j, const BitString& k);

// True iff lex_compare(j, k) is kGreater or kEqual.
bool lex_geq(const BitString& j, const BitString& k);

// Up-set {j : j >= a}, computed as the closure of `a` under the two raising
// moves 0 -> 1 and 10 -> 01. Returned sorted by numeric value.
std::vector<BitString> upset(const BitString& a);

// All 2^width strings in numeric order.
std::vector<BitString> all_strings(int width);

}  // namespace qcool

#endif  // QCOOL_BITSTRING_H_
