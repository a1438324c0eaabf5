#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "eulersym/exact.hpp"
#include "oracles.hpp"

using eulersym::Integer;
using eulersym::Rational;

TEST(Binomial, Examples) {
  EXPECT_EQ(eulersym::binomial(0, 0), 1);
  EXPECT_EQ(eulersym::binomial(5, 2), 10);
  EXPECT_EQ(eulersym::binomial(3, 7), 0);
}

TEST(Binomial, MatchesPascalTriangle) {
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= n + 2; ++k) {
      EXPECT_EQ(eulersym::binomial(n, k), oracle::pascal(n, k)) << n << " " << k;
    }
  }
}

TEST(Multinomial, Examples) {
  EXPECT_EQ(eulersym::multinomial3(3, 1, 1, 1), 6);
  EXPECT_EQ(eulersym::multinomial3(4, 4, 0, 0), 1);
  EXPECT_EQ(eulersym::multinomial3(4, 2, 1, 1), 12);
}

TEST(Multinomial, RejectsBadPartition) {
  EXPECT_THROW(eulersym::multinomial3(4, 2, 1, 0), std::invalid_argument);
  EXPECT_THROW(eulersym::multinomial3(2, 2, 1, 0), std::invalid_argument);
}

TEST(Multinomial, FactorialOracleAndRowSum) {
  for (unsigned n = 0; n <= 12; ++n) {
    Integer total = 0;
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned l = 0; k + l <= n; ++l) {
        const unsigned m = n - k - l;
        const Integer v = eulersym::multinomial3(n, k, l, m);
        EXPECT_EQ(v, oracle::multinomial(k, l, m));
        EXPECT_EQ(v, eulersym::binomial(n, k) * eulersym::binomial(n - k, l));
        total += v;
      }
    }
    EXPECT_EQ(total, eulersym::pow(Integer(3), n));
  }
}

TEST(Factorial, Small) {
  EXPECT_EQ(eulersym::factorial(0), 1);
  EXPECT_EQ(eulersym::factorial(10), 3628800);
  EXPECT_EQ(eulersym::factorial(25), oracle::fact(25));
}

TEST(Pow, Examples) {
  EXPECT_EQ(eulersym::pow(Rational::parse("2/3"), 2), Rational::parse("4/9"));
  EXPECT_EQ(eulersym::pow(Rational(0), 0), 1);
  EXPECT_EQ(eulersym::pow(Rational::parse("-7/3"), 0), 1);
  EXPECT_EQ(eulersym::pow(Rational(-1), 7), -1);
  EXPECT_EQ(eulersym::pow(Integer(0), 0), 1);
}

TEST(Rational, CanonicalForm) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(Integer(0), Integer(-5)).str(), "0");
  EXPECT_EQ(Rational(Integer(0), Integer(-5)).denominator(), 1);
  EXPECT_EQ(Rational(Integer(8), Integer(4)).str(), "2");
  EXPECT_TRUE(Rational(Integer(8), Integer(4)).is_integer());
}

TEST(Rational, ZeroDenominator) {
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
  Rational a = 1;
  EXPECT_THROW(a /= Rational(0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("0"), 0);
  EXPECT_EQ(Rational::parse("-1/3").str(), "-1/3");
  EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
  EXPECT_EQ(Rational::parse("12345678901234567890").str(), "12345678901234567890");
  for (const char* bad : {"", "-", "1/", "/2", "a", "1.5", "1/2/3", " 1", "--1", "1/-2"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(Rational::parse("3/0"), std::invalid_argument);
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 30);
  auto draw = [&] { return Rational(Integer(num(rng)), Integer(den(rng))); };
  for (int i = 0; i < 500; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, 0);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    const Rational renorm(a.numerator(), a.denominator());
    EXPECT_EQ(renorm.numerator(), a.numerator());
    EXPECT_EQ(renorm.denominator(), a.denominator());
    EXPECT_GT(a.denominator(), 0);
  }
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational::parse("-1/2"), Rational::parse("-1/3"));
  EXPECT_GT(Rational::parse("2/7"), 0);
  EXPECT_EQ(Rational::parse("-2/7").sign(), -1);
}
