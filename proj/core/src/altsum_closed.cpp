#include "eulersym/altsum.hpp"
#include "eulersym/euler.hpp"

namespace eulersym {

Rational alt_power_sum_closed(unsigned k, unsigned n) {
  const auto polys = euler_polynomials_up_to(k);
  const EulerPolynomial& ek = polys.back();
  Rational tail = ek(Rational(n + 1));
  if (n % 2 == 1) tail = -tail;
  return (ek.coeffs.front() + tail) / Rational(2);
}

}  // namespace eulersym
