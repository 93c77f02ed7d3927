#include <gtest/gtest.h>

#include "tlh/checks.hpp"
#include "tlh/fillings.hpp"
#include "tlh/known_values.hpp"

namespace {

using tlh::BitString;
using tlh::Cell;
using tlh::Filling;
using tlh::SigmaSeq;

TEST(Filling, ReferenceExample) {
  const tlh::known::SigmaExample ex;
  const SigmaSeq s(ex.r, ex.sigma);
  const Filling f = tlh::filling_from_sigma(s);
  EXPECT_EQ(f.to_ascii(), ex.grid);
  EXPECT_EQ(tlh::sigma_from_filling(f), s);
  EXPECT_EQ(tlh::v_of_sigma(s).str(), ex.v);
  EXPECT_EQ(tlh::w_of_sigma(s).str(), ex.w);
  EXPECT_EQ(tlh::filling_from_w(5, 4, BitString(ex.w)).to_ascii(), ex.grid);
}

TEST(Filling, SmallCases) {
  EXPECT_EQ(tlh::filling_from_sigma(SigmaSeq(1, {0})).to_ascii(), "1\n");
  EXPECT_EQ(tlh::filling_from_sigma(SigmaSeq(2, {2, 2})).to_ascii(), "0 0\n0 0\n");
  EXPECT_EQ(tlh::v_of_sigma(SigmaSeq(1, {0})).str(), "1");
  EXPECT_EQ(tlh::v_of_sigma(SigmaSeq(3, {3, 3, 3})).str(), "000");
  EXPECT_EQ(tlh::w_of_sigma(SigmaSeq(2, {2, 2})).str(), "0000");
  EXPECT_EQ(tlh::filling_from_w(2, 2, BitString("0000")).to_ascii(), "0 0\n0 0\n");
}

TEST(Filling, SigmaFromSimpleGrids) {
  const Filling zeros(3, 2, std::vector<Cell>(6, Cell::Zero));
  EXPECT_EQ(tlh::sigma_from_filling(zeros), SigmaSeq(3, {3, 3}));
  const Filling top(3, 1, {Cell::One, Cell::Star, Cell::Star});
  EXPECT_EQ(tlh::sigma_from_filling(top), SigmaSeq(3, {0}));
}

TEST(Filling, RejectsInadmissibleGrids) {
  EXPECT_THROW(Filling(2, 1, {Cell::Star, Cell::One}), tlh::AdmissibilityError);
  EXPECT_THROW(Filling(2, 1, {Cell::One, Cell::Zero}), tlh::AdmissibilityError);
  EXPECT_THROW(Filling(2, 2, {Cell::Zero}), tlh::AdmissibilityError);
}

TEST(Sigma, RejectsOutOfRangeEntries) {
  EXPECT_THROW(SigmaSeq(2, {3}), tlh::DomainError);
  EXPECT_THROW(SigmaSeq(0, {}), tlh::DomainError);
  EXPECT_THROW(SigmaSeq(2, {-1}), tlh::DomainError);
}

TEST(Sigma, SingleRowMakesWEqualV) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& s : tlh::all_sigmas(1, n)) EXPECT_EQ(tlh::w_of_sigma(s), tlh::v_of_sigma(s));
  }
}

TEST(Sigma, RoundTrips) {
  for (int r = 1; r <= 4; ++r) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& s : tlh::all_sigmas(r, n)) {
        const auto w = tlh::w_of_sigma(s);
        EXPECT_EQ(tlh::sigma_from_filling(tlh::filling_from_sigma(s)), s);
        EXPECT_EQ(tlh::filling_from_w(r, n, w).to_ascii(), tlh::filling_from_sigma(s).to_ascii());
        EXPECT_EQ(tlh::v_of_sigma(s).weight(), w.weight());
      }
    }
  }
}

TEST(Rotation, SequenceLevelRules) {
  const int r = 4;
  const SigmaSeq base(r, {2, 0, 4});
  EXPECT_EQ(tlh::sigma_from_filling(tlh::rotate(tlh::filling_from_sigma(base.appended(0)))), base);
  for (int k = 1; k <= r - 1; ++k) {
    EXPECT_EQ(tlh::sigma_from_filling(tlh::rotate(tlh::filling_from_sigma(base.appended(k)))),
              base.prepended(k - 1));
  }
  const auto [zero, one] = tlh::rotate_both(tlh::filling_from_sigma(base.appended(r)));
  EXPECT_EQ(tlh::sigma_from_filling(zero), base.prepended(r));
  EXPECT_EQ(tlh::sigma_from_filling(one), base.prepended(r - 1));
}

TEST(Rotation, FillArgumentMustMatchTheCase) {
  const auto vacancy = tlh::filling_from_sigma(SigmaSeq(2, {0, 2}));
  EXPECT_EQ(tlh::rotation_case(vacancy), tlh::RotationCase::vacancy);
  EXPECT_THROW(tlh::rotate(vacancy), tlh::FillArgError);
  const auto occupied = tlh::filling_from_sigma(SigmaSeq(2, {2, 1}));
  EXPECT_EQ(tlh::rotation_case(occupied), tlh::RotationCase::shift_occupied);
  EXPECT_THROW(tlh::rotate(occupied, true), tlh::FillArgError);
  EXPECT_THROW(tlh::rotate(tlh::filling_from_sigma(SigmaSeq(2, {}))), tlh::FillArgError);
}

TEST(Statistics, CStatistic) {
  EXPECT_EQ(tlh::c_statistic(SigmaSeq(5, {3, 0, 1, 5})), 7u);
  EXPECT_EQ(tlh::c_statistic(SigmaSeq(3, {0, 0, 0, 0})), 0u);
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(tlh::c_statistic(SigmaSeq(r, {r})), 0u);
  EXPECT_EQ(tlh::rev(SigmaSeq(5, {3, 0, 1, 5})), SigmaSeq(5, {5, 1, 0, 3}));
}

TEST(Statistics, FOfSingleZero) {
  tlh::MemoTable memo;
  EXPECT_EQ(tlh::f_sigma(SigmaSeq(1, {0}), memo), tlh::GradedSeries(tlh::parse_poly("1 + a"), {}));
}

class Lemma53 : public ::testing::TestWithParam<int> {};

TEST_P(Lemma53, ExhaustiveLengthThree) {
  const int r = GetParam();
  tlh::MemoTable memo;
  for (const auto& s : tlh::all_sigmas(r, 3)) {
    const auto report = tlh::verify_lemma53(s, memo);
    for (const auto& chk : report.checks) {
      EXPECT_TRUE(chk.pass) << chk.name << " k=" << chk.k << " sigma=(" << s.str() << ")";
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallR, Lemma53, ::testing::Values(1, 2, 3));

}  // namespace
