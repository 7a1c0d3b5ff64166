#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace su21;
using su21::testing::random_gaussian;
using su21::testing::random_rational;

TEST(Rational, ParsesAndPrintsCanonicalForm) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-2/4").str(), "-1/2");
  EXPECT_EQ(Rational::parse("8/4").str(), "2");
  EXPECT_EQ(Rational::parse("0").str(), "0");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1 /2", "--1", "1/-2"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, DivisionByZeroIsDegenerate) {
  EXPECT_THROW(Rational(1, 0), DegenerateInput);
  EXPECT_THROW(Rational(1) / Rational(0), DegenerateInput);
}

TEST(Rational, ArithmeticMatchesHandComputation) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(-2, 3), Rational(-1, 3));
  EXPECT_EQ(Rational(3, 4) / Rational(3, 8), Rational(2));
  EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(4, 2), Rational(6));
  EXPECT_EQ(binomial(10, 0), Rational(1));
  EXPECT_EQ(binomial(3, 5), Rational(0));
}

TEST(GaussianRational, ParseGrammar) {
  EXPECT_EQ(GaussianRational::parse("-1/2"), GaussianRational(Rational(-1, 2)));
  EXPECT_EQ(GaussianRational::parse("3/2*i"), GaussianRational(Rational(0), Rational(3, 2)));
  EXPECT_EQ(GaussianRational::parse("i"), GaussianRational::i());
  EXPECT_EQ(GaussianRational::parse("-i"), -GaussianRational::i());
  EXPECT_EQ(GaussianRational::parse("1/2+3/4*i"), GaussianRational(Rational(1, 2), Rational(3, 4)));
  EXPECT_EQ(GaussianRational::parse("-1-2*i"), GaussianRational(Rational(-1), Rational(-2)));
  EXPECT_EQ(GaussianRational::parse("1+i"), GaussianRational(Rational(1), Rational(1)));
  for (const char* bad : {"", "*i", "1+*i", "1+2*j", "1/2+"}) {
    EXPECT_THROW(GaussianRational::parse(bad), ParseError) << bad;
  }
}

TEST(GaussianRational, SignClass) {
  EXPECT_EQ(GaussianRational(Rational(-1, 3)).sign_class(), SignClass::negative_real);
  EXPECT_EQ(GaussianRational().sign_class(), SignClass::zero);
  EXPECT_EQ(GaussianRational(2).sign_class(), SignClass::positive_real);
  EXPECT_EQ(GaussianRational::i().sign_class(), SignClass::nonreal);
}

TEST(GaussianRational, ISquaredIsMinusOne) { EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1)); }

TEST(GaussianRationalProperty, FieldAndConjugationLaws) {
  std::mt19937 rng(su21::testing::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    GaussianRational a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a * b).norm2(), a.norm2() * b.norm2());
    EXPECT_EQ(a * a.conj(), GaussianRational(a.norm2()));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(GaussianRationalProperty, TextAndJsonRoundTrip) {
  std::mt19937 rng(su21::testing::kSeed + 1);
  for (int trial = 0; trial < 300; ++trial) {
    GaussianRational a = random_gaussian(rng);
    EXPECT_EQ(GaussianRational::parse(a.str()), a) << a.str();
    EXPECT_EQ(nlohmann::json(a).get<GaussianRational>(), a);
    Rational r = random_rational(rng);
    EXPECT_EQ(Rational::parse(r.str()), r);
  }
}
