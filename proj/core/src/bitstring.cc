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

#include "qcool/bitstring.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "qcool/errors.h"

namespace qcool {
namespace {

std::uint32_t mask(int width) {
  return width >= 32 ? ~0u : ((1u << width) - 1u);
}

void require_same_width(const BitString& a, const BitString& b,
                        const char* op) {
  if (a.width() != b.width()) {
    throw UsageError(std::string(op) + ": width mismatch (" +
                     std::to_string(a.width()) + " vs " +
                     std::to_string(b.width()) + ")");
  }
}

}  // namespace

BitString::BitString(int width, std::uint32_t value)
    : width_(width), value_(value) {
  if (width < 1 || width > kMaxWidth) {
    throw UsageError("bit string width must be in [1, " +
                     std::to_string(kMaxWidth) + "], got " +
                     std::to_string(width));
  }
  if ((value & ~mask(width)) != 0) {
    throw UsageError("bit string value does not fit in width " +
                     std::to_string(width));
  }
}

BitString BitString::zeros(int width) { return BitString(width, 0); }

BitString BitString::ones(int width) {
  // Validate width before computing the mask.
  BitString probe(width, 0);
  return BitString(width, mask(width));
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || static_cast<int>(text.size()) > kMaxWidth) {
    throw UsageError("cannot parse bit string '" + std::string(text) + "'");
  }
  std::uint32_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw UsageError("cannot parse bit string '" + std::string(text) + "'");
    }
    v = (v << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BitString(static_cast<int>(text.size()), v);
}

BitString BitString::joint(int system_bit, const BitString& machine) {
  if (system_bit != 0 && system_bit != 1) {
    throw UsageError("system bit must be 0 or 1");
  }
  return BitString(machine.width() + 1,
                   (static_cast<std::uint32_t>(system_bit) << machine.width()) |
                       machine.value());
}

int BitString::bit(int pos) const {
  if (pos < 1 || pos > width_) {
    throw UsageError("bit position " + std::to_string(pos) +
                     " out of range for width " + std::to_string(width_));
  }
  return static_cast<int>((value_ >> (width_ - pos)) & 1u);
}

BitString BitString::with_bit(int pos, int b) const {
  const int current = bit(pos);
  return current == b ? *this : flipped(pos);
}

BitString BitString::flipped(int pos) const {
  bit(pos);  // range check
  return BitString(width_, value_ ^ (1u << (width_ - pos)));
}

int BitString::system_bit() const { return bit(1); }

BitString BitString::machine_part() const {
  if (width_ < 2) throw UsageError("joint string needs width >= 2");
  return BitString(width_ - 1, value_ & mask(width_ - 1));
}

std::vector<int> BitString::one_positions() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(value_)));
  for (int pos = 1; pos <= width_; ++pos) {
    if ((value_ >> (width_ - pos)) & 1u) out.push_back(pos);
  }
  return out;
}

std::string BitString::str() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int pos = 1; pos <= width_; ++pos) {
    if ((value_ >> (width_ - pos)) & 1u) s[static_cast<std::size_t>(pos - 1)] = '1';
  }
  return s;
}

std::string BitString::joint_str() const {
  const std::string s = str();
  return s.substr(0, 1) + "_S" + s.substr(1);
}

const char* to_string(OrderRelation r) {
  switch (r) {
    case OrderRelation::kGreater:
      return "greater";
    case OrderRelation::kLess:
      return "less";
    case OrderRelation::kEqual:
      return "equal";
    case OrderRelation::kIncomparable:
      return "incomparable";
  }
  return "?";
}

int hamming_distance(const BitString& a, const BitString& b) {
  require_same_width(a, b, "hamming_distance");
  return std::popcount(a.value() ^ b.value());
}

int hamming_weight(const BitString& b) { return std::popcount(b.value()); }

BitString conjugate(const BitString& b) {
  return BitString(b.width(), ~b.value() & mask(b.width()));
}

bool lex_geq(const BitString& j, const BitString& k) {
  require_same_width(j, k, "lex_compare");
  const std::vector<int> jp = j.one_positions();
  const std::vector<int> kp = k.one_positions();
  if (jp.size() < kp.size()) return false;
  const std::size_t offset = jp.size() - kp.size();
  for (std::size_t i = 0; i < kp.size(); ++i) {
    if (jp[i + offset] < kp[i]) return false;
  }
  return true;
}

OrderRelation lex_compare(const BitString& j, const BitString& k) {
  if (j == k) {
    require_same_width(j, k, "lex_compare");
    return OrderRelation::kEqual;
  }
  if (lex_geq(j, k)) return OrderRelation::kGreater;
  if (lex_geq(k, j)) return OrderRelation::kLess;
  return OrderRelation::kIncomparable;
}

std::vector<BitString> upset(const BitString& a) {
  const int w = a.width();
  std::unordered_set<std::uint32_t> seen{a.value()};
  std::deque<std::uint32_t> frontier{a.value()};
  while (!frontier.empty()) {
    const std::uint32_t v = frontier.front();
    frontier.pop_front();
    auto visit = [&](std::uint32_t next) {
      if (seen.insert(next).second) frontier.push_back(next);
    };
    for (int shift = 0; shift < w; ++shift) {
      // 0 -> 1 at this position.
      if (!((v >> shift) & 1u)) visit(v | (1u << shift));
      // "10" -> "01": a one at the left neighbour moves one place right.
      if (shift + 1 < w && ((v >> (shift + 1)) & 1u) && !((v >> shift) & 1u)) {
        visit((v & ~(1u << (shift + 1))) | (1u << shift));
      }
    }
  }
  std::vector<BitString> out;
  out.reserve(seen.size());
  for (std::uint32_t v : seen) out.emplace_back(w, v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BitString> all_strings(int width) {
  BitString probe(width, 0);
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << width);
  for (std::uint32_t v = 0; v <= mask(width); ++v) {
    out.emplace_back(width, v);
    if (v == mask(width)) break;
  }
  return out;
}

}  // namespace qcool
