#include <stdexcept>
#include <string>

#include "convolution.hpp"
#include "eulersym/identities.hpp"

namespace eulersym {

namespace {

using detail::altsum_column;
using detail::binomial_convolution;
using detail::euler_column;
using detail::ratio;
using detail::shifted_euler_column;
using detail::trinomial_convolution;

Rational prefactor(unsigned base, unsigned n) { return Rational(pow(Integer(base), n)); }

// sum_k C(n,k) E_k(x1) s1^k E_{n-k}(x2) s2^{n-k}
Rational euler_euler(const EvalTables& t, unsigned n, const Rational& x1, unsigned s1,
                     const Rational& x2, unsigned s2) {
  return binomial_convolution(n, euler_column(t, n, x1, s1), euler_column(t, n, x2, s2));
}

// sum_k C(n,k) E_k(x) s^k T_{n-k}(wt - 1) st^{n-k}
Rational euler_altsum(const EvalTables& t, unsigned n, const Rational& x, unsigned s, unsigned wt,
                      unsigned st) {
  return binomial_convolution(n, euler_column(t, n, x, s), altsum_column(t, n, wt, st));
}

// sum_k C(n,k) T_k(wa - 1) sa^k T_{n-k}(wb - 1) sb^{n-k}
Rational altsum_altsum(const EvalTables& t, unsigned n, unsigned wa, unsigned sa, unsigned wb,
                       unsigned sb) {
  return binomial_convolution(n, altsum_column(t, n, wa, sa), altsum_column(t, n, wb, sb));
}

// sum C(n;k,l,m) E_k(x1) s1^k E_l(x2) s2^l T_m(wt - 1) st^m
Rational euler_euler_altsum(const EvalTables& t, unsigned n, const Rational& x1, unsigned s1,
                            const Rational& x2, unsigned s2, unsigned wt, unsigned st) {
  return trinomial_convolution(n, euler_column(t, n, x1, s1), euler_column(t, n, x2, s2),
                               altsum_column(t, n, wt, st));
}

// sum C(n;k,l,m) E_k(x) s^k T_l(wl - 1) sl^l T_m(wm - 1) sm^m
Rational euler_altsum_altsum(const EvalTables& t, unsigned n, const Rational& x, unsigned s,
                             unsigned wl, unsigned sl, unsigned wm, unsigned sm) {
  return trinomial_convolution(n, euler_column(t, n, x, s), altsum_column(t, n, wl, sl),
                               altsum_column(t, n, wm, sm));
}

// p^n sum_k C(n,k) E_k(x) s^k * scale^{n-k} sum_{i<count} (-1)^i E_{n-k}(base + step i)
Rational euler_shifted(const EvalTables& t, unsigned n, unsigned p, const Rational& x, unsigned s,
                       const Rational& base, const Rational& step, unsigned count,
                       unsigned scale) {
  return prefactor(p, n) *
         binomial_convolution(n, euler_column(t, n, x, s),
                              shifted_euler_column(t, n, base, step, count, scale));
}

// p^n sum_k C(n,k) scale^k sum_{i<count} (-1)^i E_k(base + step i) T_{n-k}(wt - 1) st^{n-k}
Rational shifted_altsum(const EvalTables& t, unsigned n, unsigned p, const Rational& base,
                        const Rational& step, unsigned count, unsigned scale, unsigned wt,
                        unsigned st) {
  return prefactor(p, n) *
         binomial_convolution(n, shifted_euler_column(t, n, base, step, count, scale),
                              altsum_column(t, n, wt, st));
}

// p^n sum_{i<count} (-1)^i E_n(base + step i)
Rational alternating_euler(const EvalTables& t, unsigned n, unsigned p, const Rational& base,
                           const Rational& step, unsigned count) {
  return prefactor(p, n) *
         detail::double_alternating_euler(t, n, base, step, count, Rational(), 1);
}

void require_shape(FamilyId id, std::span<const unsigned> w, std::span<const Rational> y,
                   unsigned w_arity, unsigned y_arity) {
  if (w.size() != w_arity || y.size() != y_arity) {
    throw std::invalid_argument(std::string(to_string(id)) + " expects " +
                                std::to_string(w_arity) + " w and " + std::to_string(y_arity) +
                                " y arguments");
  }
  detail::require_odd(w);
}

[[noreturn]] void bad_index(FamilyId id, unsigned index) {
  throw std::invalid_argument("unknown variant index " + std::to_string(index) + " for " +
                              std::string(to_string(id)));
}

Rational corollary3(const EvalTables& t, unsigned v, unsigned n, unsigned w1, unsigned w2,
                    const Rational& y1, const Rational& y2) {
  const Rational a1 = Rational(w1) * y1, a2 = Rational(w2) * y1;
  const Rational b1 = Rational(w1) * y2, b2 = Rational(w2) * y2;
  switch (v) {
    case 0: return euler_euler(t, n, a1, w2, b2, w1);
    case 1: return euler_euler(t, n, a2, w1, b1, w2);
    case 2: return euler_euler_altsum(t, n, y1, w1 * w2, b2, w1, w1, w2);
    case 3: return euler_euler_altsum(t, n, a2, w1, y2, w1 * w2, w1, w2);
    case 4: return euler_euler_altsum(t, n, y1, w1 * w2, b1, w2, w2, w1);
    case 5: return euler_euler_altsum(t, n, a1, w2, y2, w1 * w2, w2, w1);
    default: bad_index(FamilyId::C3, v);
  }
}

Rational corollary4(const EvalTables& t, unsigned v, unsigned n, unsigned w1, const Rational& y1,
                    const Rational& y2) {
  switch (v) {
    case 0: return euler_euler(t, n, Rational(w1) * y1, 1, y2, w1);
    case 1: return euler_euler(t, n, y1, w1, Rational(w1) * y2, 1);
    case 2: return euler_euler_altsum(t, n, y1, w1, y2, w1, w1, 1);
    default: bad_index(FamilyId::C4, v);
  }
}

Rational corollary6(const EvalTables& t, unsigned v, unsigned n, unsigned w1, unsigned w2,
                    const Rational& y1, const Rational& y2) {
  switch (v) {
    case 0: return euler_euler(t, n, Rational(w1) * y1, w2, Rational(w2) * y2, w1);
    case 1: return euler_euler(t, n, Rational(w2) * y1, w1, Rational(w1) * y2, w2);
    case 2: return euler_shifted(t, n, w1, y1, w2, Rational(w2) * y2, ratio(w2, w1), w1, 1);
    case 3: return euler_shifted(t, n, w1, Rational(w2) * y1, 1, y2, ratio(1, w1), w1, w2);
    case 4: return euler_shifted(t, n, w2, y1, w1, Rational(w1) * y2, ratio(w1, w2), w2, 1);
    case 5: return euler_shifted(t, n, w2, Rational(w1) * y1, 1, y2, ratio(1, w2), w2, w1);
    default: bad_index(FamilyId::C6, v);
  }
}

Rational corollary7(const EvalTables& t, unsigned v, unsigned n, unsigned w1, const Rational& y1,
                    const Rational& y2) {
  switch (v) {
    case 0: return euler_euler(t, n, y1, w1, Rational(w1) * y2, 1);
    case 1: return euler_euler(t, n, y2, w1, Rational(w1) * y1, 1);
    case 2: return euler_shifted(t, n, w1, y1, 1, y2, ratio(1, w1), w1, 1);
    default: bad_index(FamilyId::C7, v);
  }
}

// Shared by the w3 = 1 corollary of the three-way T-sum theorem and the
// two-variable chain.
Rational corollary9(const EvalTables& t, unsigned v, unsigned n, unsigned w1, unsigned w2,
                    const Rational& y1) {
  switch (v) {
    case 0: return euler_altsum(t, n, Rational(w1) * y1, w2, w2, w1);
    case 1: return euler_altsum(t, n, Rational(w2) * y1, w1, w1, w2);
    case 2: return euler_altsum_altsum(t, n, y1, w1 * w2, w1, w2, w2, w1);
    default: bad_index(FamilyId::C9, v);
  }
}

Rational corollary10(const EvalTables& t, unsigned v, unsigned n, unsigned w1, const Rational& y1) {
  switch (v) {
    case 0: return t.E(n, Rational(w1) * y1);
    case 1: return euler_altsum(t, n, y1, w1, w1, 1);
    default: bad_index(FamilyId::C10, v);
  }
}

Rational corollary12(const EvalTables& t, unsigned v, unsigned n, unsigned w1, unsigned w2,
                     const Rational& y1) {
  switch (v) {
    case 0: return alternating_euler(t, n, w1, Rational(w2) * y1, ratio(w2, w1), w1);
    case 1: return alternating_euler(t, n, w2, Rational(w1) * y1, ratio(w1, w2), w2);
    case 2: return euler_altsum(t, n, Rational(w2) * y1, w1, w1, w2);
    case 3: return euler_altsum(t, n, Rational(w1) * y1, w2, w2, w1);
    case 4: return shifted_altsum(t, n, w1, y1, ratio(1, w1), w1, w2, w2, 1);
    case 5: return shifted_altsum(t, n, w2, y1, ratio(1, w2), w2, w1, w1, 1);
    default: bad_index(FamilyId::C12, v);
  }
}

Rational corollary13(const EvalTables& t, unsigned v, unsigned n, unsigned w1, const Rational& y1) {
  switch (v) {
    case 0: return t.E(n, Rational(w1) * y1);
    case 1: return alternating_euler(t, n, w1, y1, ratio(1, w1), w1);
    case 2: return euler_altsum(t, n, y1, w1, w1, 1);
    default: bad_index(FamilyId::C13, v);
  }
}

Rational corollary15(const EvalTables& t, unsigned v, unsigned n, unsigned w1, unsigned w2,
                     const Rational& y1) {
  switch (v) {
    case 0: return alternating_euler(t, n, w1, Rational(w2) * y1, ratio(w2, w1), w1);
    case 1: return alternating_euler(t, n, w2, Rational(w1) * y1, ratio(w1, w2), w2);
    case 2:
      return prefactor(w1 * w2, n) *
             detail::double_alternating_euler(t, n, y1, ratio(1, w1), w1, ratio(1, w2), w2);
    default: bad_index(FamilyId::C15, v);
  }
}

Rational corollary18(const EvalTables& t, unsigned v, unsigned n, unsigned w1, unsigned w2) {
  switch (v) {
    case 0: return altsum_altsum(t, n, w2, w1, w1, 1);
    case 1: return altsum_altsum(t, n, w1, w2, w2, 1);
    default: bad_index(FamilyId::C18, v);
  }
}

}  // namespace

Rational eval_corollary(const EvalTables& tables, FamilyId id, unsigned variant_index, unsigned n,
                        std::span<const unsigned> w, std::span<const Rational> y) {
  switch (id) {
    case FamilyId::C3:
      require_shape(id, w, y, 2, 2);
      return corollary3(tables, variant_index, n, w[0], w[1], y[0], y[1]);
    case FamilyId::C4:
      require_shape(id, w, y, 1, 2);
      return corollary4(tables, variant_index, n, w[0], y[0], y[1]);
    case FamilyId::C6:
      require_shape(id, w, y, 2, 2);
      return corollary6(tables, variant_index, n, w[0], w[1], y[0], y[1]);
    case FamilyId::C7:
      require_shape(id, w, y, 1, 2);
      return corollary7(tables, variant_index, n, w[0], y[0], y[1]);
    case FamilyId::C9:
      require_shape(id, w, y, 2, 1);
      return corollary9(tables, variant_index, n, w[0], w[1], y[0]);
    case FamilyId::C10:
      require_shape(id, w, y, 1, 1);
      return corollary10(tables, variant_index, n, w[0], y[0]);
    case FamilyId::C12:
      require_shape(id, w, y, 2, 1);
      return corollary12(tables, variant_index, n, w[0], w[1], y[0]);
    case FamilyId::C13:
      require_shape(id, w, y, 1, 1);
      return corollary13(tables, variant_index, n, w[0], y[0]);
    case FamilyId::C15:
      require_shape(id, w, y, 2, 1);
      return corollary15(tables, variant_index, n, w[0], w[1], y[0]);
    case FamilyId::C18:
      require_shape(id, w, y, 2, 0);
      return corollary18(tables, variant_index, n, w[0], w[1]);
    default:
      throw std::invalid_argument(std::string(to_string(id)) + " is not a corollary");
  }
}

Rational eval_intro_chain(const EvalTables& tables, unsigned variant_index, unsigned n,
                          unsigned w1, unsigned w2, const Rational& y1) {
  const std::array<unsigned, 2> w{w1, w2};
  detail::require_odd(w);
  switch (variant_index) {
    case 0: return corollary9(tables, 0, n, w1, w2, y1);
    case 1: return corollary9(tables, 1, n, w1, w2, y1);
    case 2: return alternating_euler(tables, n, w1, Rational(w2) * y1, ratio(w2, w1), w1);
    case 3: return alternating_euler(tables, n, w2, Rational(w1) * y1, ratio(w1, w2), w2);
    case 4: return corollary9(tables, 2, n, w1, w2, y1);
    case 5: return shifted_altsum(tables, n, w1, y1, ratio(1, w1), w1, w2, w2, 1);
    case 6: return shifted_altsum(tables, n, w2, y1, ratio(1, w2), w2, w1, w1, 1);
    case 7:
      return prefactor(w1 * w2, n) *
             detail::double_alternating_euler(tables, n, y1, ratio(1, w1), w1, ratio(1, w2), w2);
    default: bad_index(FamilyId::IntroChain, variant_index);
  }
}

}  // namespace eulersym
