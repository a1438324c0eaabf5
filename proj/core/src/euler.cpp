#include "eulersym/euler.hpp"

#include <stdexcept>
#include <string>

namespace eulersym {

Rational EulerPolynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::vector<EulerPolynomial> euler_polynomials_up_to(unsigned n_max) {
  const Rational half(Integer(1), Integer(2));
  std::vector<EulerPolynomial> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    EulerPolynomial p{n, std::vector<Rational>(n + 1)};
    p.coeffs[n] = 1;
    for (unsigned k = 0; k < n; ++k) {
      const Rational weight = half * Rational(binomial(n, k));
      const auto& prev = out[k].coeffs;
      for (unsigned j = 0; j <= k; ++j) p.coeffs[j] -= weight * prev[j];
    }
    out.push_back(std::move(p));
  }
  return out;
}

Rational euler_eval(unsigned n, const Rational& x) {
  return euler_polynomials_up_to(n).back()(x);
}

Rational euler_number(unsigned n) {
  return euler_polynomials_up_to(n).back().coeffs.front();
}

EulerTable::EulerTable(unsigned max_degree) : polys_(euler_polynomials_up_to(max_degree)) {}

const EulerPolynomial& EulerTable::polynomial(unsigned n) const {
  if (n >= polys_.size()) {
    throw std::out_of_range("Euler table holds degrees <= " + std::to_string(max_degree()) +
                            ", requested " + std::to_string(n));
  }
  return polys_[n];
}

std::vector<Rational> EulerTable::eval_all(unsigned n, const Rational& x) const {
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) out.push_back(polynomial(k)(x));
  return out;
}

}  // namespace eulersym
