#include <gtest/gtest.h>

#include "tlh/known_values.hpp"
#include "tlh/links.hpp"

namespace {

using tlh::BitString;
using tlh::DenomVector;
using tlh::GradedSeries;
using tlh::parse_poly;

GradedSeries over_q(const char* num, int power) {
  DenomVector d;
  d.add(1, power);
  return GradedSeries(parse_poly(num), d);
}

TEST(TorusLink, Unknot) { EXPECT_EQ(tlh::torus_link_homology({1, 1}), over_q("1 + a", 1)); }

TEST(TorusLink, Trefoil) {
  EXPECT_EQ(tlh::torus_link_homology({2, 3}), over_q("t^-1 (1 + a)(t + a + q)", 1));
}

TEST(TorusLink, T46MatchesReference) {
  EXPECT_EQ(tlh::torus_link_homology({4, 6}), tlh::known::torus_4_6());
}

TEST(TorusLink, SymmetricInMAndN) {
  tlh::MemoTable memo;
  for (int m = 1; m <= 6; ++m) {
    for (int n = m + 1; n <= 7; ++n) {
      EXPECT_EQ(tlh::torus_link_homology({m, n}, memo), tlh::torus_link_homology({n, m}, memo))
          << m << "," << n;
    }
  }
}

TEST(TorusLink, RejectsNonPositive) {
  EXPECT_THROW(tlh::torus_link_homology({0, 5}), tlh::DomainError);
  EXPECT_THROW(tlh::torus_link_homology({3, -1}), tlh::DomainError);
}

TEST(Normalization, Shifts) {
  EXPECT_EQ(tlh::normalization_shift(tlh::TorusLinkSpec{2, 3}), (tlh::Monomial{-4, 1, 1}));
  EXPECT_EQ(tlh::normalization_shift(tlh::TorusLinkSpec{1, 1}), (tlh::Monomial{0, 0, 0}));
  EXPECT_EQ(tlh::normalization_shift(tlh::TorusLinkSpec{2, 2}), (tlh::Monomial{-4, 1, 1}));
  EXPECT_EQ(tlh::normalization_data({4, 6}).exponent(), (24 + 2 - 10) / 2);
}

TEST(Normalization, OddExponentIsRejected) {
  const tlh::NormalizationData bad{3, 1, 3};
  EXPECT_THROW(bad.exponent(), tlh::ParityError);
}

TEST(Normalization, ScalesTheValue) {
  EXPECT_EQ(tlh::normalized_homology({1, 1}), over_q("1 + a", 1));
  const tlh::Monomial shift{-4, 1, 1};
  EXPECT_EQ(tlh::normalized_homology({2, 3}), tlh::torus_link_homology({2, 3}).scaled(shift));
  EXPECT_EQ(tlh::normalized_homology({2, 2}), tlh::torus_link_homology({2, 2}).scaled(shift));
}

TEST(ShuffledLink, Examples) {
  tlh::MemoTable memo;
  EXPECT_EQ(tlh::shuffled_link_homology(BitString("10"), BitString("10"), memo),
            tlh::eval_p({BitString("00"), BitString("00")}, memo));
  EXPECT_EQ(tlh::shuffled_link_homology(BitString("01"), BitString("01"), memo), over_q("(1 + a)^2", 2));
  EXPECT_THROW(tlh::shuffled_link_homology(BitString("0101"), BitString("01"), memo), tlh::ColorError);
}

TEST(Colored, UncoloredCaseIsTheTorusLink) {
  tlh::MemoTable memo;
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 5; ++n) {
      EXPECT_EQ(tlh::colored_torus_homology(m, n, 1, tlh::ColoredOrder::theorem, memo),
                tlh::torus_link_homology({m, n}, memo));
    }
  }
}

TEST(Colored, UnknotProductFormula) {
  for (int l = 1; l <= 6; ++l) {
    EXPECT_EQ(tlh::colored_torus_homology(1, 1, l), tlh::known::colored_unknot(l)) << "l=" << l;
  }
}

// The theorem ordering 1^l 0^{ml-l} with the prefactor reproduces the
// reference Sym^2 trefoil up to a monomial; the other ordering does not.
TEST(Colored, Sym2TrefoilMatchesTheoremOrdering) {
  tlh::MemoTable memo;
  const auto expected = tlh::known::colored_trefoil_sym2();
  const auto theorem = tlh::colored_torus_homology(2, 3, 2, tlh::ColoredOrder::theorem, memo);
  EXPECT_TRUE(tlh::monomial_ratio(theorem, expected).has_value());
  const auto example = tlh::colored_torus_homology(2, 3, 2, tlh::ColoredOrder::example, memo);
  EXPECT_FALSE(tlh::monomial_ratio(example, expected).has_value());
}

TEST(Colored, RejectsBadInput) {
  EXPECT_THROW(tlh::colored_torus_homology(0, 3, 2), tlh::DomainError);
  EXPECT_THROW(tlh::colored_torus_homology(2, 3, 0), tlh::DomainError);
}

}  // namespace
