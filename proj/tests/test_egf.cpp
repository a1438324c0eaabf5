#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "eulersym/altsum.hpp"
#include "eulersym/egf.hpp"
#include "eulersym/euler.hpp"
#include "oracles.hpp"

using eulersym::LambdaFamily;
using eulersym::Rational;
using eulersym::TruncatedEgf;

namespace {

std::vector<Rational> coeffs(const TruncatedEgf& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

TruncatedEgf random_series(std::mt19937& rng, unsigned order, bool invertible) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c;
  for (unsigned k = 0; k <= order; ++k) c.emplace_back(eulersym::Integer(num(rng)), eulersym::Integer(den(rng)));
  if (invertible && c[0].is_zero()) c[0] = 1;
  return TruncatedEgf(std::move(c));
}

// Closed forms written out directly from exponential atoms.
TruncatedEgf atom(const Rational& a, unsigned order) { return eulersym::egf_exp(a, order); }
TruncatedEgf plus_one(unsigned a, unsigned order) { return atom(a, order) + TruncatedEgf::unit(order); }

}  // namespace

TEST(EgfExp, Examples) {
  EXPECT_EQ(coeffs(eulersym::egf_exp(0, 4)), (std::vector<Rational>{1, 0, 0, 0, 0}));
  EXPECT_EQ(coeffs(eulersym::egf_exp(1, 3)), (std::vector<Rational>{1, 1, 1, 1}));
  EXPECT_EQ(coeffs(eulersym::egf_exp(Rational::parse("2/3"), 2)),
            (std::vector<Rational>{1, Rational::parse("2/3"), Rational::parse("4/9")}));
}

TEST(EgfArithmetic, Examples) {
  const auto e = eulersym::egf_exp(1, 10);
  const auto sq = e * e;
  for (unsigned k = 0; k <= 10; ++k) EXPECT_EQ(sq.coeff(k), oracle::power(2, k));
  EXPECT_EQ(e + eulersym::egf_scale(e, -1), TruncatedEgf::zero(10));
  EXPECT_EQ(eulersym::egf_coeff(eulersym::egf_exp(2, 5), 3), 8);
  EXPECT_EQ(eulersym::egf_coeff(TruncatedEgf::zero(6), 4), 0);
}

TEST(EgfArithmetic, EulerNumbersByDivision) {
  const auto q = eulersym::egf_scale(TruncatedEgf::unit(4), 2) / plus_one(1, 4);
  EXPECT_EQ(coeffs(q), (std::vector<Rational>{1, Rational::parse("-1/2"), 0,
                                              Rational::parse("1/4"), 0}));
  for (unsigned n = 0; n <= 4; ++n) EXPECT_EQ(q.coeff(n), eulersym::euler_number(n));
}

TEST(EgfArithmetic, OrderIsMinimumOfOperands) {
  const auto a = eulersym::egf_exp(1, 5);
  const auto b = eulersym::egf_exp(2, 8);
  EXPECT_EQ((a + b).order(), 5u);
  EXPECT_EQ((a - b).order(), 5u);
  EXPECT_EQ((b * a).order(), 5u);
  EXPECT_EQ((b / a).order(), 5u);
}

TEST(EgfArithmetic, NonInvertibleDivision) {
  const auto a = eulersym::egf_exp(1, 5);
  const auto z = eulersym::egf_exp(1, 5) - TruncatedEgf::unit(5);
  try {
    (void)(a / z);
    FAIL() << "expected domain_error";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "non-invertible series");
  }
}

TEST(EgfArithmetic, CoefficientBounds) {
  const auto a = eulersym::egf_exp(1, 3);
  EXPECT_THROW(a.coeff(4), std::out_of_range);
  EXPECT_THROW(eulersym::egf_coeff(a, 4), std::out_of_range);
  EXPECT_THROW(TruncatedEgf(std::vector<Rational>{}), std::invalid_argument);
}

TEST(EgfArithmetic, DivisionRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned order = 1 + trial % 24;
    const auto f = random_series(rng, order, false);
    const auto g = random_series(rng, order, true);
    EXPECT_EQ((f / g) * g, f);
  }
}

TEST(EgfArithmetic, PowMatchesRepeatedProduct) {
  const auto b = plus_one(3, 12);
  EXPECT_EQ(eulersym::egf_pow(b, 0), TruncatedEgf::unit(12));
  EXPECT_EQ(eulersym::egf_pow(b, 3), b * b * b);
}

TEST(QuotientAlternating, Examples) {
  EXPECT_EQ(eulersym::quotient_alternating(1, 6), TruncatedEgf::unit(6));
  EXPECT_EQ(coeffs(eulersym::quotient_alternating(3, 2)), (std::vector<Rational>{1, 1, 3}));
  EXPECT_EQ(coeffs(eulersym::quotient_alternating(5, 1)), (std::vector<Rational>{1, 2}));
  EXPECT_EQ(eulersym::egf_coeff(eulersym::quotient_alternating(3, 4), 1), 1);
}

TEST(QuotientAlternating, RejectsEvenAndZeroW) {
  EXPECT_THROW(eulersym::quotient_alternating(2, 4), std::invalid_argument);
  EXPECT_THROW(eulersym::quotient_alternating(0, 4), std::invalid_argument);
}

TEST(QuotientAlternating, CoefficientsAreAlternatingSums) {
  for (unsigned w = 1; w <= 9; w += 2) {
    const auto q = eulersym::quotient_alternating(w, 24);
    for (unsigned k = 0; k <= 24; ++k) EXPECT_EQ(q.coeff(k), oracle::alt_sum(k, w - 1));
  }
}

TEST(LambdaSeries, UnitCases) {
  const std::array<unsigned, 3> ones{1, 1, 1};
  EXPECT_EQ(eulersym::lambda_series(LambdaFamily::k12_1, 1, ones, {}, 10), TruncatedEgf::unit(10));
  EXPECT_EQ(eulersym::lambda_series(LambdaFamily::k23, 3, ones, {}, 10), TruncatedEgf::unit(10));
  EXPECT_EQ(eulersym::lambda_series(LambdaFamily::k13, 3, ones, {}, 10), TruncatedEgf::unit(10));
}

TEST(LambdaSeries, MatchesDirectConstruction) {
  // Numerator 8 e^{W(y1+y2+y3)t} over prod (e^{w_i w_j t} + 1) at w = (1,3,5).
  const unsigned N = 10;
  const std::vector<Rational> y{Rational::parse("1/2"), -1, Rational::parse("2/7")};
  const Rational s = y[0] + y[1] + y[2];
  const auto num = eulersym::egf_scale(atom(s * 15, N), 8);
  const auto den = plus_one(15, N) * plus_one(5, N) * plus_one(3, N);
  EXPECT_EQ(eulersym::lambda_series(LambdaFamily::k23, 0, {1, 3, 5}, y, N), num / den);

  const auto den13 = plus_one(1, N) * plus_one(3, N) * plus_one(5, N);
  EXPECT_EQ(eulersym::lambda_series(LambdaFamily::k13, 0, {1, 3, 5}, y, N), num / den13);

  const auto num12 = eulersym::egf_scale(atom(y[0] * (15 + 5 + 3), N), 8);
  EXPECT_EQ(eulersym::lambda_series(LambdaFamily::k12_0, 0, {1, 3, 5}, std::span(y).first(1), N),
            num12 / den13);
  EXPECT_EQ(eulersym::lambda_series(LambdaFamily::k12_1, 1, {1, 3, 5}, {}, N), den / den13);
}

TEST(LambdaSeries, ShapeErrors) {
  const std::vector<Rational> y3{0, 0, 0};
  const std::vector<Rational> y2{0, 0};
  EXPECT_THROW(eulersym::lambda_series(LambdaFamily::k23, 0, {1, 3, 5}, y2, 4), std::invalid_argument);
  EXPECT_THROW(eulersym::lambda_series(LambdaFamily::k23, 4, {1, 3, 5}, {}, 4), std::invalid_argument);
  EXPECT_THROW(eulersym::lambda_series(LambdaFamily::k23, 1, {1, 2, 5}, y2, 4), std::invalid_argument);
  EXPECT_NO_THROW(eulersym::lambda_series(LambdaFamily::k23, 0, {1, 2, 4}, y3, 4));
  EXPECT_THROW(eulersym::lambda_series(LambdaFamily::k12_0, 1, {1, 3, 5}, y2, 4), std::invalid_argument);
  EXPECT_THROW(eulersym::lambda_series(LambdaFamily::k12_1, 0, {1, 3, 5}, {}, 4), std::invalid_argument);
  EXPECT_THROW(eulersym::lambda_series(LambdaFamily::k12_1, 1, {1, 3, 4}, {}, 4), std::invalid_argument);
}

TEST(LambdaSeries, FamilyTags) {
  for (auto f : {LambdaFamily::k23, LambdaFamily::k13, LambdaFamily::k12_0, LambdaFamily::k12_1}) {
    EXPECT_EQ(eulersym::parse_lambda_family(eulersym::to_string(f)), f);
  }
  EXPECT_EQ(eulersym::parse_lambda_family("l12_1"), LambdaFamily::k12_1);
  EXPECT_THROW(eulersym::parse_lambda_family("L99"), std::invalid_argument);
}

TEST(LambdaSeries, PermutationInvariance) {
  const std::vector<Rational> ys{0, Rational::parse("1/2"), Rational::parse("-1/3")};
  const std::array<unsigned, 3> w{1, 3, 5};
  for (auto fam : {LambdaFamily::k23, LambdaFamily::k13}) {
    for (unsigned i = 0; i <= 3; ++i) {
      const std::vector<Rational> y(ys.begin(), ys.begin() + (3 - i));
      const auto base = eulersym::lambda_series(fam, i, w, y, 12);
      for (const auto& p : std::vector<std::array<unsigned, 3>>{{1, 5, 3}, {3, 1, 5}, {3, 5, 1}, {5, 1, 3}, {5, 3, 1}}) {
        EXPECT_EQ(eulersym::lambda_series(fam, i, p, y, 12), base);
      }
    }
  }
  const auto b0 = eulersym::lambda_series(LambdaFamily::k12_0, 0, w, std::span(ys).first(1), 12);
  const auto b1 = eulersym::lambda_series(LambdaFamily::k12_1, 1, w, {}, 12);
  EXPECT_EQ(eulersym::lambda_series(LambdaFamily::k12_0, 0, {5, 1, 3}, std::span(ys).first(1), 12), b0);
  EXPECT_EQ(eulersym::lambda_series(LambdaFamily::k12_1, 1, {3, 5, 1}, {}, 12), b1);
}

TEST(LambdaSeries, SubstitutionRescalesTime) {
  // L23 at (w2 w3, w1 w3, w1 w2) has coefficient n equal to W^n times that of L13 at w.
  const std::vector<Rational> ys{Rational::parse("1/2"), Rational::parse("-1/3"), 1};
  for (const std::array<unsigned, 3> w : {std::array<unsigned, 3>{1, 3, 5}, {3, 3, 5}, {1, 1, 3}}) {
    const unsigned W = w[0] * w[1] * w[2];
    const std::array<unsigned, 3> sub{w[1] * w[2], w[0] * w[2], w[0] * w[1]};
    for (unsigned i = 0; i <= 3; ++i) {
      const std::vector<Rational> y(ys.begin(), ys.begin() + (3 - i));
      const auto lhs = eulersym::lambda_series(LambdaFamily::k23, i, sub, y, 10);
      const auto rhs = eulersym::lambda_series(LambdaFamily::k13, i, w, y, 10);
      for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(lhs.coeff(n), oracle::power(W, n) * rhs.coeff(n));
    }
  }
}

TEST(LambdaSeries, ReverseSubstitutionDoesNotHold) {
  // Swapping the roles of the two quotients breaks the rescaling: at
  // w = (1,1,3), i = 0, y = 0 both sides are the same series.
  const std::array<unsigned, 3> w{1, 1, 3};
  const std::array<unsigned, 3> sub{3, 3, 1};
  const std::vector<Rational> y{0, 0, 0};
  const auto l13 = eulersym::lambda_series(LambdaFamily::k13, 0, sub, y, 2);
  const auto l23 = eulersym::lambda_series(LambdaFamily::k23, 0, w, y, 2);
  EXPECT_EQ(l13, l23);
  EXPECT_NE(l13.coeff(1), 3 * l23.coeff(1));
}
