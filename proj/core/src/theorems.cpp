#include "convolution.hpp"
#include "eulersym/identities.hpp"

namespace eulersym {

namespace detail {

std::vector<Rational> euler_column(const EvalTables& tables, unsigned n, const Rational& x,
                                   const Integer& scale) {
  std::vector<Rational> out = tables.euler().eval_all(n, x);
  Integer power = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) power *= scale;
    out[k] *= Rational(power);
  }
  return out;
}

std::vector<Rational> altsum_column(const EvalTables& tables, unsigned n, unsigned w,
                                    const Integer& scale) {
  std::vector<Rational> out(n + 1);
  Integer power = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) power *= scale;
    out[k] = tables.T(k, w - 1) * Rational(power);
  }
  return out;
}

std::vector<Rational> shifted_euler_column(const EvalTables& tables, unsigned n,
                                           const Rational& base, const Rational& step,
                                           unsigned count, const Integer& scale) {
  std::vector<Rational> out(n + 1);
  for (unsigned i = 0; i < count; ++i) {
    const std::vector<Rational> values = tables.euler().eval_all(n, base + step * Rational(i));
    for (unsigned k = 0; k <= n; ++k) {
      if (i % 2 == 0) {
        out[k] += values[k];
      } else {
        out[k] -= values[k];
      }
    }
  }
  Integer power = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) power *= scale;
    out[k] *= Rational(power);
  }
  return out;
}

Rational binomial_convolution(unsigned n, std::span<const Rational> a, std::span<const Rational> b) {
  Rational acc;
  for (unsigned k = 0; k <= n; ++k) acc += Rational(binomial(n, k)) * a[k] * b[n - k];
  return acc;
}

Rational trinomial_convolution(unsigned n, std::span<const Rational> a,
                               std::span<const Rational> b, std::span<const Rational> c) {
  // C(n; k, l, m) = C(n, k) C(n - k, l)
  Rational acc;
  for (unsigned k = 0; k <= n; ++k) {
    if (a[k].is_zero()) continue;
    acc += Rational(binomial(n, k)) * a[k] * binomial_convolution(n - k, b, c);
  }
  return acc;
}

Rational double_alternating_euler(const EvalTables& tables, unsigned n, const Rational& base,
                                  const Rational& step_i, unsigned count_i, const Rational& step_j,
                                  unsigned count_j) {
  const EulerPolynomial& poly = tables.euler().polynomial(n);
  Rational acc;
  for (unsigned i = 0; i < count_i; ++i) {
    for (unsigned j = 0; j < count_j; ++j) {
      const Rational value = poly(base + step_i * Rational(i) + step_j * Rational(j));
      if ((i + j) % 2 == 0) {
        acc += value;
      } else {
        acc -= value;
      }
    }
  }
  return acc;
}

}  // namespace detail

using detail::altsum_column;
using detail::binomial_convolution;
using detail::euler_column;
using detail::ratio;
using detail::shifted_euler_column;
using detail::trinomial_convolution;

std::string Perm::str() const {
  return "(" + std::to_string(a() + 1) + "," + std::to_string(b() + 1) + "," +
         std::to_string(c() + 1) + ")";
}

EvalTables::EvalTables(unsigned max_degree, unsigned max_w)
    : euler_(max_degree), altsum_(max_degree, max_w) {}

Rational eval_T1_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                         const std::array<Rational, 3>& y) {
  detail::require_positive(w);
  const Integer wa = w[perm.a()], wb = w[perm.b()], wc = w[perm.c()];
  // w_a^{l+m} w_b^{k+m} w_c^{k+l} = (w_b w_c)^k (w_a w_c)^l (w_a w_b)^m
  const auto ks = euler_column(tables, n, Rational(wa) * y[0], wb * wc);
  const auto ls = euler_column(tables, n, Rational(wb) * y[1], wa * wc);
  const auto ms = euler_column(tables, n, Rational(wc) * y[2], wa * wb);
  return trinomial_convolution(n, ks, ls, ms);
}

Rational eval_T2_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                         const std::array<Rational, 2>& y) {
  detail::require_odd(w);
  const Integer wa = w[perm.a()], wb = w[perm.b()], wc = w[perm.c()];
  const auto ks = euler_column(tables, n, Rational(wa) * y[0], wb * wc);
  const auto ls = euler_column(tables, n, Rational(wb) * y[1], wa * wc);
  const auto ms = altsum_column(tables, n, w[perm.c()], wa * wb);
  return trinomial_convolution(n, ks, ls, ms);
}

Rational eval_T5_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                         const std::array<Rational, 2>& y) {
  detail::require_odd(w);
  const unsigned wa = w[perm.a()], wb = w[perm.b()], wc = w[perm.c()];
  // E_k(w_c y1) w_b^k  and  w_c^{n-k} sum_i (-1)^i E_{n-k}(w_b y2 + (w_b/w_a) i)
  const auto ks = euler_column(tables, n, Rational(wc) * y[0], wb);
  const auto rest = shifted_euler_column(tables, n, Rational(wb) * y[1], ratio(wb, wa), wa, wc);
  return Rational(pow(Integer(wa), n)) * binomial_convolution(n, ks, rest);
}

Rational eval_T8_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                         const Rational& y1) {
  detail::require_odd(w);
  const Integer wa = w[perm.a()], wb = w[perm.b()], wc = w[perm.c()];
  const auto ks = euler_column(tables, n, Rational(wa) * y1, wb * wc);
  const auto ls = altsum_column(tables, n, w[perm.b()], wa * wc);
  const auto ms = altsum_column(tables, n, w[perm.c()], wa * wb);
  return trinomial_convolution(n, ks, ls, ms);
}

Rational eval_T11_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                          const Rational& y1) {
  detail::require_odd(w);
  const unsigned wa = w[perm.a()], wb = w[perm.b()], wc = w[perm.c()];
  const auto ks = shifted_euler_column(tables, n, Rational(wb) * y1, ratio(wb, wa), wa, wc);
  const auto rest = altsum_column(tables, n, wc, wb);
  return Rational(pow(Integer(wa), n)) * binomial_convolution(n, ks, rest);
}

Rational eval_T14_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                          const Rational& y1) {
  detail::require_odd(w);
  const unsigned wa = w[perm.a()], wb = w[perm.b()], wc = w[perm.c()];
  const Rational sum = detail::double_alternating_euler(tables, n, Rational(wc) * y1,
                                                        ratio(wc, wa), wa, ratio(wc, wb), wb);
  return Rational(pow(Integer(wa) * wb, n)) * sum;
}

Rational eval_T16_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                          const Rational& y) {
  detail::require_positive(w);
  const Integer wa = w[perm.a()], wb = w[perm.b()], wc = w[perm.c()];
  const auto ks = euler_column(tables, n, Rational(wa) * y, wc);
  const auto ls = euler_column(tables, n, Rational(wb) * y, wa);
  const auto ms = euler_column(tables, n, Rational(wc) * y, wb);
  return trinomial_convolution(n, ks, ls, ms);
}

Rational eval_T17_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w) {
  detail::require_odd(w);
  const unsigned wa = w[perm.a()], wb = w[perm.b()], wc = w[perm.c()];
  const auto ks = altsum_column(tables, n, wa, wc);
  const auto ls = altsum_column(tables, n, wb, wa);
  const auto ms = altsum_column(tables, n, wc, wb);
  return trinomial_convolution(n, ks, ls, ms);
}

Rational eval_a3_expansion(const EvalTables& tables, unsigned n, const W3& w) {
  detail::require_odd(w);
  const Integer w1 = w[0], w2 = w[1], w3 = w[2];
  const auto ks = altsum_column(tables, n, w[0], w2 * w3);
  const auto ls = altsum_column(tables, n, w[1], w1 * w3);
  const auto ms = altsum_column(tables, n, w[2], w1 * w2);
  return trinomial_convolution(n, ks, ls, ms);
}

}  // namespace eulersym
