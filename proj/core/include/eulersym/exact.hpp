#pragma once

// Exact integer and rational arithmetic, plus the combinatorial
// coefficients the rest of the library is built on.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eulersym {

using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. Zero is 0/1, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}            // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}           // NOLINT(google-explicit-constructor)
  Rational(unsigned value) : value_(value) {}       // NOLINT(google-explicit-constructor)
  Rational(unsigned long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {} // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when `denominator` is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p/q", "-p/q" or an integer "n". Whitespace, signs on the
  /// denominator and a zero denominator are rejected with
  /// std::invalid_argument. The result is canonicalized.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Canonical "p/q" form; "n" alone when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

/// n choose k; zero when k > n.
Integer binomial(unsigned n, unsigned k);

/// n! / (k! l! m!). Throws std::invalid_argument unless k + l + m == n.
Integer multinomial3(unsigned n, unsigned k, unsigned l, unsigned m);

Integer factorial(unsigned n);

/// Exact power with 0^0 == 1.
Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

}  // namespace eulersym
