#pragma once

// Slow, independent reference computations. Nothing here calls the production
// tables or convolution helpers.

#include <array>
#include <stdexcept>
#include <vector>

#include "eulersym/egf.hpp"
#include "eulersym/exact.hpp"

namespace oracle {

using eulersym::Integer;
using eulersym::Rational;

inline Integer pascal(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Integer> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<Integer> next(r + 1);
    next[0] = next[r] = 1;
    for (unsigned j = 1; j < r; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

inline Integer fact(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer multinomial(unsigned k, unsigned l, unsigned m) {
  return fact(k + l + m) / (fact(k) * fact(l) * fact(m));
}

inline Rational power(const Rational& b, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

/// sum_{i=0}^{n} (-1)^i i^k with 0^0 = 1.
inline Rational alt_sum(unsigned k, unsigned n) {
  Rational s = 0;
  for (unsigned i = 0; i <= n; ++i) {
    const Rational term = power(Rational(i), k);
    if (i % 2) s -= term; else s += term;
  }
  return s;
}

/// Solves V c = v where V[j][k] = x_j^k, by Gaussian elimination.
inline std::vector<Rational> interpolate(const std::vector<Rational>& xs,
                                         const std::vector<Rational>& vs) {
  const std::size_t n = xs.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m[j][k] = power(xs[j], static_cast<unsigned>(k));
    m[j][n] = vs[j];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col].is_zero()) ++piv;
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = m[j][n] / m[j][j];
  return out;
}

/// E_n(x) as coefficient n of 2 e^{xt} / (e^t + 1), by series division.
inline std::vector<Rational> euler_values_by_series(const Rational& x, unsigned order) {
  using namespace eulersym;
  const auto num = egf_scale(egf_exp(x, order), 2);
  const auto den = egf_exp(1, order) + TruncatedEgf::unit(order);
  const auto q = egf_div(num, den);
  return {q.coeffs().begin(), q.coeffs().end()};
}

/// Coefficient vectors of E_0 .. E_{n_max}, recovered by interpolating
/// series-extracted values at x = 0 .. n_max.
inline std::vector<std::vector<Rational>> euler_polys_by_series(unsigned n_max) {
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> values;
  for (unsigned j = 0; j <= n_max; ++j) {
    xs.emplace_back(j);
    values.push_back(euler_values_by_series(Rational(j), n_max));
  }
  std::vector<std::vector<Rational>> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    std::vector<Rational> px(xs.begin(), xs.begin() + n + 1);
    std::vector<Rational> pv;
    for (unsigned j = 0; j <= n; ++j) pv.push_back(values[j][n]);
    out.push_back(interpolate(px, pv));
  }
  return out;
}

/// E_n(x) evaluated from series-extracted values, no polynomial table.
inline Rational euler_at(unsigned n, const Rational& x) {
  return euler_values_by_series(x, n)[n];
}

}  // namespace oracle
