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

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "qcool/errors.h"
#include "support/brute_force.h"

namespace qcool {
namespace {

using ::testing::ElementsAreArray;
using testing::parse_all;

BitString B(const char* s) { return BitString::parse(s); }

TEST(BitStringTest, ParseAndRender) {
  const auto b = B("0110");
  EXPECT_EQ(b.width(), 4);
  EXPECT_EQ(b.value(), 6u);
  EXPECT_EQ(b.str(), "0110");
  EXPECT_EQ(b.bit(1), 0);
  EXPECT_EQ(b.bit(2), 1);
  EXPECT_EQ(b.one_positions(), (std::vector<int>{2, 3}));
}

TEST(BitStringTest, NumericOrderMatchesTextOrder) {
  EXPECT_LT(B("011"), B("100"));
  EXPECT_LT(B("001"), B("010"));
  EXPECT_LT(B("11"), B("000"));  // width first
}

TEST(BitStringTest, RejectsBadInput) {
  EXPECT_THROW(B(""), UsageError);
  EXPECT_THROW(B("01a"), UsageError);
  EXPECT_THROW(BitString(3, 8), UsageError);
  EXPECT_THROW(BitString(0, 0), UsageError);
  EXPECT_THROW(BitString(kMaxWidth + 1, 0), UsageError);
  EXPECT_THROW(B("01").bit(3), UsageError);
  EXPECT_THROW(hamming_distance(B("01"), B("011")), UsageError);
  EXPECT_THROW(lex_compare(B("01"), B("011")), UsageError);
}

TEST(BitStringTest, WidestStringRoundTrips) {
  const auto b = BitString::ones(kMaxWidth);
  EXPECT_EQ(BitString::parse(b.str()), b);
  EXPECT_EQ(hamming_weight(b), kMaxWidth);
}

TEST(BitStringTest, JointStrings) {
  const auto j = BitString::joint(1, B("001"));
  EXPECT_EQ(j.str(), "1001");
  EXPECT_EQ(j.system_bit(), 1);
  EXPECT_EQ(j.machine_part(), B("001"));
  EXPECT_EQ(j.joint_str(), "1_S001");
  EXPECT_THROW(BitString::joint(2, B("0")), UsageError);
}

TEST(BitStringTest, HammingAndConjugate) {
  EXPECT_EQ(hamming_distance(B("0011"), B("1100")), 4);
  EXPECT_EQ(hamming_distance(B("0101"), B("0101")), 0);
  EXPECT_EQ(conjugate(B("0110")), B("1001"));
  EXPECT_EQ(hamming_weight(B("10110")), 3);
}

TEST(LexOrderTest, SmallCases) {
  EXPECT_EQ(lex_compare(B("01"), B("10")), OrderRelation::kGreater);
  EXPECT_EQ(lex_compare(B("10"), B("01")), OrderRelation::kLess);
  EXPECT_EQ(lex_compare(B("101"), B("101")), OrderRelation::kEqual);
  EXPECT_EQ(lex_compare(B("110"), B("001")), OrderRelation::kIncomparable);
  EXPECT_TRUE(lex_geq(B("111"), B("000")));
  EXPECT_TRUE(lex_geq(B("0101"), B("1010")));
  EXPECT_FALSE(lex_geq(B("1110"), B("0101")));
}

TEST(LexOrderTest, MatchesSuffixDominanceExhaustively) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& j : all_strings(n)) {
      for (const auto& k : all_strings(n)) {
        const bool expected = testing::suffix_dominates(j, k);
        ASSERT_EQ(lex_geq(j, k), expected) << j.str() << " vs " << k.str();
        if (expected && j != k) {
          ASSERT_EQ(lex_compare(j, k), OrderRelation::kGreater);
        }
      }
    }
  }
}

TEST(LexOrderTest, ImpliesEnergyOrderForAnySortedGaps) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6;
    std::vector<double> g(n);
    for (auto& x : g) x = u(rng);
    std::sort(g.begin(), g.end());
    for (const auto& j : all_strings(n)) {
      for (const auto& k : all_strings(n)) {
        if (!lex_geq(j, k)) continue;
        double ej = 0, ek = 0;
        for (int p = 1; p <= n; ++p) {
          ej += j.bit(p) * g[p - 1];
          ek += k.bit(p) * g[p - 1];
        }
        ASSERT_GE(ej, ek - 1e-12);
      }
    }
  }
}

TEST(UpsetTest, MatchesFilter) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& a : all_strings(n)) {
      ASSERT_EQ(upset(a), testing::upset_by_filter(a)) << a.str();
    }
  }
}

TEST(UpsetTest, KnownSets) {
  EXPECT_THAT(upset(B("101")), ElementsAreArray(parse_all({"011", "101", "111"})));
  EXPECT_THAT(upset(B("11")), ElementsAreArray(parse_all({"11"})));
  EXPECT_EQ(upset(B("0000")).size(), 16u);
  EXPECT_THAT(upset(B("1111")), ElementsAreArray(parse_all({"1111"})));
}

TEST(AllStringsTest, CountsAndOrder) {
  const auto all = all_strings(3);
  ASSERT_EQ(all.size(), 8u);
  EXPECT_EQ(all.front(), B("000"));
  EXPECT_EQ(all.back(), B("111"));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

}  // namespace
}  // namespace qcool
