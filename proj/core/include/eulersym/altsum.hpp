#pragma once

// Alternating power sums T_k(n) = sum_{i=0}^{n} (-1)^i i^k, with 0^0 = 1.

#include <vector>

#include "eulersym/exact.hpp"

namespace eulersym {

/// Direct summation.
Rational alt_power_sum(unsigned k, unsigned n);

/// (E_k(0) + (-1)^n E_k(n+1)) / 2, through the Euler polynomials. Kept as an
/// independent cross-check of alt_power_sum.
Rational alt_power_sum_closed(unsigned k, unsigned n);

/// T_k(n) for k <= k_max, n <= n_max, filled row by row with
/// T_k(n) = T_k(n-1) + (-1)^n n^k.
class AltPowerSumTable {
 public:
  AltPowerSumTable(unsigned k_max, unsigned n_max);

  unsigned k_max() const { return k_max_; }
  unsigned n_max() const { return n_max_; }

  /// Throws std::out_of_range outside the table.
  const Rational& at(unsigned k, unsigned n) const;

 private:
  unsigned k_max_;
  unsigned n_max_;
  std::vector<Rational> values_;
};

}  // namespace eulersym
