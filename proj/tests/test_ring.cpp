#include <random>

#include <gtest/gtest.h>

#include "tlh/json_io.hpp"
#include "tlh/render.hpp"
#include "tlh/ring.hpp"

namespace {

using tlh::DenomVector;
using tlh::GradedSeries;
using tlh::LaurentPoly;
using tlh::parse_poly;
using tlh::qat;

LaurentPoly random_poly(std::mt19937_64& rng, int terms = 6) {
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    p += LaurentPoly::monomial(qat(exp(rng), exp(rng) + 3, exp(rng)), coeff(rng));
  }
  return p;
}

GradedSeries over_one_minus_q(const LaurentPoly& num, int power = 1) {
  DenomVector d;
  d.add(1, power);
  return GradedSeries(num, d);
}

TEST(Lattice, SublatticeVariablesInRawGrading) {
  EXPECT_EQ(qat(1, 0, 0), (tlh::Monomial{2, 0, 0}));
  EXPECT_EQ(qat(0, 1, 0), (tlh::Monomial{-2, 1, 0}));
  EXPECT_EQ(qat(0, 0, 1), (tlh::Monomial{-2, 0, 2}));
}

TEST(Lattice, RoundTripAndOffLatticeRejection) {
  for (int i = -3; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      for (int k = -3; k <= 3; ++k) {
        const auto e = tlh::to_qat(qat(i, j, k));
        EXPECT_EQ(e.q, i);
        EXPECT_EQ(e.a, j);
        EXPECT_EQ(e.t, k);
      }
    }
  }
  EXPECT_THROW(tlh::to_qat(tlh::Monomial{-4, 1, 1}), tlh::LatticeError);
  EXPECT_FALSE(tlh::on_qat_lattice(tlh::Monomial{1, 0, 0}));
}

TEST(Poly, AdditiveInverse) {
  const auto f = parse_poly("q t^-2 + 3 a - 7");
  EXPECT_TRUE((f + (-f)).is_zero());
}

TEST(Poly, SmallProduct) {
  EXPECT_EQ(parse_poly("1 + a") * parse_poly("t + a"), parse_poly("t + a + a t + a^2"));
}

TEST(Poly, HandMultiplication) {
  // (1 + a)(q + t + a - q t) expanded by hand term by term.
  const auto product = parse_poly("1 + a") * parse_poly("q + t + a - q t");
  LaurentPoly expected;
  expected += LaurentPoly::monomial(qat(1, 0, 0));
  expected += LaurentPoly::monomial(qat(0, 0, 1));
  expected += LaurentPoly::monomial(qat(0, 1, 0));
  expected += LaurentPoly::monomial(qat(1, 0, 1), -1);
  expected += LaurentPoly::monomial(qat(1, 1, 0));
  expected += LaurentPoly::monomial(qat(0, 1, 1));
  expected += LaurentPoly::monomial(qat(0, 2, 0));
  expected += LaurentPoly::monomial(qat(1, 1, 1), -1);
  EXPECT_EQ(product, expected);
  EXPECT_EQ(product.size(), 8u);
}

TEST(Poly, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_poly(rng);
    const auto g = random_poly(rng);
    const auto h = random_poly(rng);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f - g + g, f);
  }
}

TEST(Poly, BigCoefficientsStayExact) {
  auto p = parse_poly("1 + q").pow(200);
  EXPECT_EQ(p.coefficient(qat(100, 0, 0)).str(),
            "90548514656103281165404177077484163874504589675413336841320");
}

TEST(Series, AdditiveIdentityAndCancellation) {
  const auto x = over_one_minus_q(parse_poly("1 + a"));
  EXPECT_EQ(x + GradedSeries(), x);
  const auto zero = x + (-x);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(zero.denominator().entries().empty());
}

TEST(Series, DenominatorMultiplicitiesAdd) {
  const auto x = over_one_minus_q(parse_poly("1 + a"));
  EXPECT_EQ(x * x, over_one_minus_q(parse_poly("(1 + a)^2"), 2));
}

TEST(Series, ExactFactorCancels) {
  const auto s = over_one_minus_q(parse_poly("(1 - q)(1 + a)"));
  EXPECT_EQ(s.numerator(), parse_poly("1 + a"));
  EXPECT_TRUE(s.denominator().entries().empty());
}

TEST(Series, NonDivisibleNumeratorIsKept) {
  const auto s = over_one_minus_q(parse_poly("1 + a"));
  EXPECT_EQ(s.denominator().multiplicity(1), 1);
  EXPECT_EQ(s.numerator(), parse_poly("1 + a"));
}

TEST(Series, MultiplyThenCancelRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_poly(rng);
    const auto s = over_one_minus_q(DenomVector::factor(1) * f);
    EXPECT_EQ(s, GradedSeries(f, {})) << tlh::render_human(f);
  }
}

TEST(Series, CancelsMixedFactors) {
  DenomVector d;
  d.add(1);
  d.add(2, 2);
  const auto f = parse_poly("q + a t^2");
  const auto num = f * DenomVector::factor(2) * DenomVector::factor(1);
  const GradedSeries s(num, d);
  EXPECT_EQ(s.numerator(), f);
  EXPECT_EQ(s.denominator().multiplicity(1), 0);
  EXPECT_EQ(s.denominator().multiplicity(2), 1);
}

TEST(Series, SumOverCommonDenominatorIsCanonical) {
  // 1/(1-q) - q/(1-q) = 1
  const auto s = over_one_minus_q(LaurentPoly(1)) - over_one_minus_q(parse_poly("q"));
  EXPECT_EQ(s, GradedSeries(LaurentPoly(1), {}));
}

TEST(Series, MonomialRatio) {
  const auto x = over_one_minus_q(parse_poly("1 + a"));
  const auto y = x.scaled(qat(2, 1, -3));
  const auto r = tlh::monomial_ratio(y, x);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, qat(2, 1, -3));
  EXPECT_FALSE(tlh::monomial_ratio(x + y, x).has_value());
}

TEST(Expand, GeometricSeries) {
  const auto x = over_one_minus_q(parse_poly("1 + a"));
  EXPECT_EQ(tlh::expand_series(x, 2), parse_poly("(1 + a)(1 + q + q^2)"));
  EXPECT_TRUE(tlh::expand_series(GradedSeries(), 5).is_zero());
}

TEST(Expand, SquaredDenominator) {
  const auto x = over_one_minus_q(LaurentPoly(1), 2);
  EXPECT_EQ(tlh::expand_series(x, 3), parse_poly("1 + 2 q + 3 q^2 + 4 q^3"));
}

TEST(Render, HumanAndJson) {
  EXPECT_EQ(tlh::render_human(parse_poly("1 + a")), "1 + a");
  const auto x = over_one_minus_q(parse_poly("1 + a"));
  EXPECT_EQ(tlh::render_human(x), "(1 + a)/(1 - q)");
  EXPECT_EQ(tlh::render_json(x), R"({"num":[[-2,1,0,1],[0,0,0,1]],"den":[[1,1]]})");
}

TEST(Render, GradingConvert) {
  const auto terms = tlh::grading_convert(parse_poly("q"), tlh::Grading::QAT);
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].exponents, (std::array<int, 3>{2, 0, 0}));
  const auto a = tlh::grading_convert(parse_poly("a"), tlh::Grading::QAT);
  EXPECT_EQ(a[0].exponents, (std::array<int, 3>{-2, 1, 0}));
  const auto t = tlh::grading_convert(parse_poly("t"), tlh::Grading::QAT);
  EXPECT_EQ(t[0].exponents, (std::array<int, 3>{-2, 0, 2}));
}

TEST(Render, ParseRenderRoundTripProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_poly(rng);
    EXPECT_EQ(parse_poly(tlh::render_human(f)), f) << tlh::render_human(f);
    EXPECT_EQ(parse_poly(tlh::render_latex(f)), f) << tlh::render_latex(f);
    DenomVector d;
    d.add(1 + trial % 3, 1 + trial % 2);
    const GradedSeries s(f, d);
    EXPECT_EQ(tlh::parse_series_json(tlh::render_json(s)), s);
  }
}

TEST(Render, RawGradingOffLattice) {
  const auto p = LaurentPoly::monomial(tlh::Monomial{-4, 1, 1});
  EXPECT_EQ(tlh::render_human(p), "A Q^-4 T");
  EXPECT_EQ(parse_poly("A Q^-4 T"), p);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(tlh::parse_series_json("{"), tlh::ParseError);
  EXPECT_THROW(tlh::parse_series_json(R"({"num":[[1,2,3]],"den":[]})"), tlh::ParseError);
  EXPECT_THROW(tlh::parse_series_json(R"({"num":[],"den":[[1,1]],"x":1})"), tlh::ParseError);
}

TEST(Json, HugeCoefficientsSurvive) {
  const std::string text = R"({"num":[[0,0,0,123456789012345678901234567890]],"den":[]})";
  const auto s = tlh::parse_series_json(text);
  EXPECT_EQ(tlh::render_json(s), text);
}

}  // namespace
