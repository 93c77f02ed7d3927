#include <gtest/gtest.h>

#include "tlh/checks.hpp"
#include "tlh/sequences.hpp"

namespace {

using tlh::BitString;
using tlh::Permutation;
using tlh::SeqPair;

SeqPair P(const char* v, const char* w) { return {BitString(v), BitString(w)}; }

TEST(BitString, Weight) {
  EXPECT_EQ(BitString("").weight(), 0u);
  EXPECT_EQ(BitString("0101").weight(), 2u);
  EXPECT_EQ(BitString("1111").weight(), 4u);
  EXPECT_THROW(BitString("012"), tlh::ParseError);
}

TEST(Inversions, Examples) {
  EXPECT_EQ(tlh::inversions(BitString("10")), 1u);
  EXPECT_EQ(tlh::inversions(BitString("0011")), 0u);
  const std::vector<int> sigma{3, 0, 1, 5};
  EXPECT_EQ(tlh::inversions(sigma), 2u);
}

TEST(Inversions, ZeroExactlyWhenSorted) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& v : tlh::all_bit_strings(n)) {
      const std::string s = v.str();
      EXPECT_EQ(tlh::inversions(v) == 0, std::is_sorted(s.begin(), s.end())) << s;
    }
  }
}

TEST(ParseIntSequence, CommaSeparated) {
  EXPECT_EQ(tlh::parse_int_sequence("3,0,1,5"), (std::vector<int>{3, 0, 1, 5}));
  EXPECT_TRUE(tlh::parse_int_sequence("").empty());
  EXPECT_THROW(tlh::parse_int_sequence("1,,2"), tlh::ParseError);
}

TEST(PairValidate, Examples) {
  const auto p = tlh::pair_validate("0101", "0011");
  EXPECT_EQ(p.l(), 2u);
  EXPECT_THROW(tlh::pair_validate("1", "0"), tlh::WeightMismatch);
  const auto e = tlh::pair_validate("", "000");
  EXPECT_EQ(e.l(), 0u);
  EXPECT_EQ(e.n(), 3u);
}

TEST(PairOrder, Examples) {
  EXPECT_TRUE(tlh::pair_precedes(P("", ""), P("0", "0")));
  EXPECT_TRUE(tlh::pair_precedes(P("11", "11"), P("00", "00")));
  EXPECT_TRUE(tlh::pair_precedes(P("01", "01"), P("10", "10")));
}

TEST(PairOrder, ReflexiveAndTransitive) {
  const auto pairs = tlh::all_pairs(3, 3, 5);
  for (const auto& p : pairs) EXPECT_TRUE(tlh::pair_precedes(p, p));
  for (const auto& x : pairs) {
    for (const auto& y : pairs) {
      if (!tlh::pair_precedes(x, y)) continue;
      for (const auto& z : pairs) {
        if (tlh::pair_precedes(y, z)) {
          EXPECT_TRUE(tlh::pair_precedes(x, z));
        }
      }
    }
  }
}

// Rule 4 sends (10, 01) to (1, 10). The componentwise order cannot compare
// the two, so the evaluator descends along a summed measure instead.
TEST(PairOrder, ComponentwiseOrderMissesRuleEdge) {
  const auto parent = P("10", "01");
  const auto child = P("1", "10");
  EXPECT_FALSE(tlh::pair_strictly_precedes(child, parent));
  EXPECT_LT(tlh::descent_measure(child), tlh::descent_measure(parent));
}

TEST(ShufflePermutation, Examples) {
  EXPECT_EQ(tlh::shuffle_permutation(BitString("01")), (Permutation{1, 2}));
  EXPECT_EQ(tlh::shuffle_permutation(BitString("10")), (Permutation{2, 1}));
  EXPECT_EQ(tlh::shuffle_permutation(BitString("100")), (Permutation{2, 3, 1}));
  EXPECT_THROW(tlh::shuffle_permutation(BitString("")), tlh::EmptyInput);
}

TEST(ShufflePermutation, OrderPreservingOnBlocks) {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& v : tlh::all_bit_strings(n)) {
      const auto pi = tlh::shuffle_permutation(v);
      const std::size_t k = n - v.weight();
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(v[static_cast<std::size_t>(pi[i] - 1)], i >= k) << v.str();
        if (i + 1 != k && i + 1 < n) {
          EXPECT_LT(pi[i], pi[i + 1]) << v.str();
        }
      }
    }
  }
}

TEST(ShufflePermutation, ClosedFormulaReadings) {
  // Read literally, the factor for v = 10 is s_2, which does not exist in S_2.
  EXPECT_FALSE(tlh::shuffle_permutation_closed(BitString("10"), tlh::ClosedFormulaReading::as_stated));
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : tlh::all_bit_strings(n)) {
      EXPECT_EQ(tlh::shuffle_permutation_closed(w, tlh::ClosedFormulaReading::shifted),
                std::optional<Permutation>(tlh::shuffle_permutation(w)))
          << w.str();
    }
  }
}

}  // namespace
