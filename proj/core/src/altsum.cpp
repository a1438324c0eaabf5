#include "eulersym/altsum.hpp"

#include <stdexcept>
#include <string>

namespace eulersym {

Rational alt_power_sum(unsigned k, unsigned n) {
  Integer sum = 0;
  for (unsigned i = 0; i <= n; ++i) {
    const Integer term = pow(Integer(i), k);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return Rational(sum);
}

AltPowerSumTable::AltPowerSumTable(unsigned k_max, unsigned n_max)
    : k_max_(k_max), n_max_(n_max), values_(static_cast<std::size_t>(k_max + 1) * (n_max + 1)) {
  for (unsigned k = 0; k <= k_max; ++k) {
    Integer running = k == 0 ? 1 : 0;  // T_k(0)
    values_[static_cast<std::size_t>(k) * (n_max + 1)] = Rational(running);
    for (unsigned n = 1; n <= n_max; ++n) {
      const Integer term = pow(Integer(n), k);
      if (n % 2 == 0) {
        running += term;
      } else {
        running -= term;
      }
      values_[static_cast<std::size_t>(k) * (n_max + 1) + n] = Rational(running);
    }
  }
}

const Rational& AltPowerSumTable::at(unsigned k, unsigned n) const {
  if (k > k_max_ || n > n_max_) {
    throw std::out_of_range("T_" + std::to_string(k) + "(" + std::to_string(n) +
                            ") outside table bounds");
  }
  return values_[static_cast<std::size_t>(k) * (n_max_ + 1) + n];
}

}  // namespace eulersym
