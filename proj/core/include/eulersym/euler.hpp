#pragma once

// Euler polynomials E_n(x), defined by 2 e^{xt} / (e^t + 1) = sum E_n(x) t^n / n!,
// and the Euler numbers E_n = E_n(0).

#include <span>
#include <vector>

#include "eulersym/exact.hpp"

namespace eulersym {

/// Dense coefficients of E_n(x); coeffs[j] multiplies x^j.
struct EulerPolynomial {
  unsigned degree = 0;
  std::vector<Rational> coeffs;

  /// Horner evaluation.
  Rational operator()(const Rational& x) const;
};

/// E_0 .. E_{n_max} from E_n(x) = x^n - 1/2 sum_{k<n} C(n,k) E_k(x).
std::vector<EulerPolynomial> euler_polynomials_up_to(unsigned n_max);

Rational euler_eval(unsigned n, const Rational& x);
Rational euler_number(unsigned n);

/// Read-only table of E_0 .. E_{max_degree}, built once and shared by
/// evaluators for the duration of a run.
class EulerTable {
 public:
  explicit EulerTable(unsigned max_degree);

  unsigned max_degree() const { return static_cast<unsigned>(polys_.size()) - 1; }

  /// Throws std::out_of_range when n exceeds max_degree().
  const EulerPolynomial& polynomial(unsigned n) const;
  Rational eval(unsigned n, const Rational& x) const { return polynomial(n)(x); }

  /// E_0(x) .. E_{n}(x) in one pass.
  std::vector<Rational> eval_all(unsigned n, const Rational& x) const;

 private:
  std::vector<EulerPolynomial> polys_;
};

}  // namespace eulersym
