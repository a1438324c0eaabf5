#pragma once

// Building blocks shared by the identity evaluators. A "column" is the list
// f_0 .. f_n of one factor's values with its w-weight folded in, so a
// displayed sum over k+l+m = n becomes a multinomial convolution of columns.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulersym/exact.hpp"
#include "eulersym/identities.hpp"

namespace eulersym::detail {

inline void require_positive(std::span<const unsigned> w) {
  for (unsigned v : w) {
    if (v == 0) throw std::invalid_argument("w components must be positive integers");
  }
}

inline void require_odd(std::span<const unsigned> w) {
  for (unsigned v : w) {
    if (v == 0 || v % 2 == 0) {
      throw std::invalid_argument("w components must be odd positive integers, got " +
                                  std::to_string(v));
    }
  }
}

/// E_k(x) * scale^k for k = 0..n.
std::vector<Rational> euler_column(const EvalTables& tables, unsigned n, const Rational& x,
                                   const Integer& scale);

/// T_k(w - 1) * scale^k for k = 0..n.
std::vector<Rational> altsum_column(const EvalTables& tables, unsigned n, unsigned w,
                                    const Integer& scale);

/// sum_{i<count} (-1)^i E_k(base + step * i) * scale^k for k = 0..n.
std::vector<Rational> shifted_euler_column(const EvalTables& tables, unsigned n,
                                           const Rational& base, const Rational& step,
                                           unsigned count, const Integer& scale);

/// sum_{k+l=n} C(n,k) a_k b_l.
Rational binomial_convolution(unsigned n, std::span<const Rational> a, std::span<const Rational> b);

/// sum_{k+l+m=n} C(n;k,l,m) a_k b_l c_m.
Rational trinomial_convolution(unsigned n, std::span<const Rational> a,
                               std::span<const Rational> b, std::span<const Rational> c);

/// sum_{i<count_i} sum_{j<count_j} (-1)^{i+j} E_n(base + step_i * i + step_j * j).
Rational double_alternating_euler(const EvalTables& tables, unsigned n, const Rational& base,
                                  const Rational& step_i, unsigned count_i, const Rational& step_j,
                                  unsigned count_j);

inline Rational ratio(unsigned num, unsigned den) { return Rational(Integer(num), Integer(den)); }

}  // namespace eulersym::detail
