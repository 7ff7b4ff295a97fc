#include <gtest/gtest.h>

#include <stdexcept>

#include "bnchain/rational.hpp"

using bnchain::Rational;

TEST(Rational, NormalisesSignAndGcd) {
  const Rational q(6, -4);
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(Rational(0, -5), Rational(0));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(2, 3), Rational(-1, 6));
  EXPECT_EQ(Rational(3, 4) * Rational(2, 9), Rational(1, 6));
  EXPECT_EQ(Rational(3, 4) / Rational(3, 8), Rational(2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, FloorRoundsDown) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-4).floor(), -4);
}

TEST(Rational, ModLandsInHalfOpenRange) {
  EXPECT_EQ(bnchain::mod(Rational(39), Rational(14)), Rational(11));
  EXPECT_EQ(bnchain::mod(Rational(-1, 2), Rational(3)), Rational(5, 2));
  EXPECT_EQ(bnchain::mod(Rational(14), Rational(14)), Rational(0));
}

TEST(Rational, OrderingAndParse) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("13/1"), Rational(13));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational(11, 3).str(), "11/3");
  EXPECT_EQ(Rational(5).str(), "5/1");
  for (const char* bad : {"", "1/", "/2", "a/b", "1/0", "1.5", "2/3x"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(bnchain::lcm64(std::int64_t{1} << 40, (std::int64_t{1} << 40) - 1), std::overflow_error);
  EXPECT_EQ(bnchain::lcm64(4, 6), 12);
}
