#pragma once

// Truncated exponential generating functions sum_{k<=N} c_k t^k / k! over
// exact rationals. Products are binomial convolutions.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulersym/exact.hpp"

namespace eulersym {

/// Default truncation order for series work.
inline constexpr unsigned kDefaultOrder = 24;

class TruncatedEgf {
 public:
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit TruncatedEgf(std::vector<Rational> coeffs);

  static TruncatedEgf zero(unsigned order);
  static TruncatedEgf unit(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Throws std::out_of_range when k > order().
  const Rational& coeff(unsigned k) const;

  friend bool operator==(const TruncatedEgf&, const TruncatedEgf&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// e^{a t}: c_k = a^k.
TruncatedEgf egf_exp(const Rational& a, unsigned order);

// Binary operations truncate to the smaller of the two orders.
TruncatedEgf egf_add(const TruncatedEgf& lhs, const TruncatedEgf& rhs);
TruncatedEgf egf_sub(const TruncatedEgf& lhs, const TruncatedEgf& rhs);
TruncatedEgf egf_mul(const TruncatedEgf& lhs, const TruncatedEgf& rhs);
TruncatedEgf egf_scale(const TruncatedEgf& series, const Rational& factor);
/// Forward substitution. Throws std::domain_error("non-invertible series")
/// when rhs has a zero constant term.
TruncatedEgf egf_div(const TruncatedEgf& lhs, const TruncatedEgf& rhs);
TruncatedEgf egf_pow(const TruncatedEgf& base, unsigned exponent);

Rational egf_coeff(const TruncatedEgf& series, unsigned k);

inline TruncatedEgf operator+(const TruncatedEgf& a, const TruncatedEgf& b) { return egf_add(a, b); }
inline TruncatedEgf operator-(const TruncatedEgf& a, const TruncatedEgf& b) { return egf_sub(a, b); }
inline TruncatedEgf operator*(const TruncatedEgf& a, const TruncatedEgf& b) { return egf_mul(a, b); }
inline TruncatedEgf operator/(const TruncatedEgf& a, const TruncatedEgf& b) { return egf_div(a, b); }

/// (e^{wt} + 1) / (e^t + 1) by series division; for odd w its coefficients
/// are T_k(w - 1). Even w is rejected with std::invalid_argument.
TruncatedEgf quotient_alternating(unsigned w, unsigned order);

/// The four quotient shapes built from e^{at} atoms.
enum class LambdaFamily { k23, k13, k12_0, k12_1 };

std::string_view to_string(LambdaFamily family);
/// Accepts "L23", "L13", "L12_0", "L12_1" (case-insensitive "l" prefix).
LambdaFamily parse_lambda_family(std::string_view tag);

/// Closed-form quotient series.
///   k23, k13: sub-index i in 0..3, y of length 3 - i, w odd when i >= 1.
///   k12_0:    i must be 0, y of length 1, any positive w.
///   k12_1:    i must be 1, y empty, odd w.
/// Shape or parity mismatches throw std::invalid_argument.
TruncatedEgf lambda_series(LambdaFamily family, unsigned i, const std::array<unsigned, 3>& w,
                           std::span<const Rational> y, unsigned order);

}  // namespace eulersym
