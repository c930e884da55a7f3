#include "commprob/rational.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using commprob::BigInt;
using commprob::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  Rational r{BigInt(6), BigInt(-8)};
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(r.str(), "-3/4");
  EXPECT_EQ(Rational(0).str(), "0/1");
  EXPECT_EQ(Rational(5).str(), "5/1");
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error); }

TEST(Rational, Arithmetic) {
  Rational a{BigInt(1), BigInt(2)};
  Rational b{BigInt(1), BigInt(3)};
  EXPECT_EQ(a + b, Rational(BigInt(5), BigInt(6)));
  EXPECT_EQ(a - b, Rational(BigInt(1), BigInt(6)));
  EXPECT_EQ(a * b, Rational(BigInt(1), BigInt(6)));
  EXPECT_EQ(a / b, Rational(BigInt(3), BigInt(2)));
  EXPECT_EQ(-a, Rational(BigInt(-1), BigInt(2)));
  EXPECT_EQ(abs(-a), a);
}

TEST(Rational, Ordering) {
  Rational five_eighths{BigInt(5), BigInt(8)};
  Rational half{BigInt(1), BigInt(2)};
  EXPECT_LT(half, five_eighths);
  EXPECT_GT(five_eighths, half);
  EXPECT_LE(half, half);
  EXPECT_LT(Rational(-1), Rational(0));
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("7/120"), Rational(BigInt(7), BigInt(120)));
  EXPECT_EQ(Rational::parse("14/240").str(), "7/120");
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
  EXPECT_EQ(Rational(BigInt(1), BigInt(12)).pretty(), "1/12 (0.083333)");
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.5), Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(Rational::from_double(0.375), Rational(BigInt(3), BigInt(8)));
  Rational tenth = Rational::from_double(0.1);
  EXPECT_NE(tenth, Rational(BigInt(1), BigInt(10)));
  EXPECT_DOUBLE_EQ(tenth.to_double(), 0.1);
}

TEST(Rational, FactorialPowFloor) {
  EXPECT_EQ(commprob::factorial(0), 1);
  EXPECT_EQ(commprob::factorial(7), 5040);
  EXPECT_EQ(commprob::factorial(25).str(), "15511210043330985984000000");
  EXPECT_EQ(pow(Rational(BigInt(1), BigInt(2)), 5), Rational(BigInt(1), BigInt(32)));
  EXPECT_EQ(floor(Rational(BigInt(7), BigInt(2))), 3);
  EXPECT_EQ(floor(Rational(BigInt(-7), BigInt(2))), -4);
}

TEST(RationalProperty, FieldAxiomsOnSeededSamples) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
  auto draw = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
  for (int i = 0; i < 500; ++i) {
    Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    if (a.to_double() < b.to_double()) EXPECT_LT(a, b);
    EXPECT_EQ(Rational::parse(a.str()), a);
  }
}
