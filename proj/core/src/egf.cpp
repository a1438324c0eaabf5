#include "eulersym/egf.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eulersym {

namespace {

std::vector<std::vector<Integer>> pascal_rows(unsigned order) {
  std::vector<std::vector<Integer>> rows(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    rows[n].resize(n + 1);
    rows[n][0] = rows[n][n] = 1;
    for (unsigned k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

unsigned common_order(const TruncatedEgf& a, const TruncatedEgf& b) {
  return std::min(a.order(), b.order());
}

// e^{a t} + 1
TruncatedEgf exp_plus_one(const Integer& a, unsigned order) {
  return egf_add(egf_exp(Rational(a), order), TruncatedEgf::unit(order));
}

void require_odd(std::span<const unsigned> w, const char* what) {
  for (unsigned v : w) {
    if (v == 0) throw std::invalid_argument(std::string(what) + ": w components must be positive");
    if (v % 2 == 0) throw std::invalid_argument(std::string(what) + ": w components must be odd");
  }
}

void require_positive(std::span<const unsigned> w, const char* what) {
  for (unsigned v : w) {
    if (v == 0) throw std::invalid_argument(std::string(what) + ": w components must be positive");
  }
}

}  // namespace

TruncatedEgf::TruncatedEgf(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("truncated series needs at least c_0");
}

TruncatedEgf TruncatedEgf::zero(unsigned order) {
  return TruncatedEgf(std::vector<Rational>(order + 1));
}

TruncatedEgf TruncatedEgf::unit(unsigned order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  return TruncatedEgf(std::move(c));
}

const Rational& TruncatedEgf::coeff(unsigned k) const {
  if (k > order()) {
    throw std::out_of_range("coefficient " + std::to_string(k) + " beyond truncation order " +
                            std::to_string(order()));
  }
  return coeffs_[k];
}

TruncatedEgf egf_exp(const Rational& a, unsigned order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (unsigned k = 1; k <= order; ++k) c[k] = c[k - 1] * a;
  return TruncatedEgf(std::move(c));
}

TruncatedEgf egf_add(const TruncatedEgf& lhs, const TruncatedEgf& rhs) {
  const unsigned n = common_order(lhs, rhs);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = lhs.coeffs()[k] + rhs.coeffs()[k];
  return TruncatedEgf(std::move(c));
}

TruncatedEgf egf_sub(const TruncatedEgf& lhs, const TruncatedEgf& rhs) {
  const unsigned n = common_order(lhs, rhs);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = lhs.coeffs()[k] - rhs.coeffs()[k];
  return TruncatedEgf(std::move(c));
}

TruncatedEgf egf_mul(const TruncatedEgf& lhs, const TruncatedEgf& rhs) {
  const unsigned n = common_order(lhs, rhs);
  const auto binom = pascal_rows(n);
  std::vector<Rational> c(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    Rational acc;
    for (unsigned k = 0; k <= m; ++k) {
      acc += Rational(binom[m][k]) * lhs.coeffs()[k] * rhs.coeffs()[m - k];
    }
    c[m] = std::move(acc);
  }
  return TruncatedEgf(std::move(c));
}

TruncatedEgf egf_scale(const TruncatedEgf& series, const Rational& factor) {
  std::vector<Rational> c(series.coeffs().begin(), series.coeffs().end());
  for (auto& v : c) v *= factor;
  return TruncatedEgf(std::move(c));
}

TruncatedEgf egf_div(const TruncatedEgf& lhs, const TruncatedEgf& rhs) {
  const auto& g = rhs.coeffs();
  if (g[0].is_zero()) throw std::domain_error("non-invertible series");
  const unsigned n = common_order(lhs, rhs);
  const auto binom = pascal_rows(n);
  std::vector<Rational> q(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    Rational acc = lhs.coeffs()[m];
    for (unsigned k = 0; k < m; ++k) acc -= Rational(binom[m][k]) * q[k] * g[m - k];
    q[m] = acc / g[0];
  }
  return TruncatedEgf(std::move(q));
}

TruncatedEgf egf_pow(const TruncatedEgf& base, unsigned exponent) {
  TruncatedEgf out = TruncatedEgf::unit(base.order());
  for (unsigned e = 0; e < exponent; ++e) out = egf_mul(out, base);
  return out;
}

Rational egf_coeff(const TruncatedEgf& series, unsigned k) { return series.coeff(k); }

TruncatedEgf quotient_alternating(unsigned w, unsigned order) {
  if (w == 0 || w % 2 == 0) {
    throw std::invalid_argument("quotient_alternating: w must be a positive odd integer");
  }
  return egf_div(exp_plus_one(w, order), exp_plus_one(1, order));
}

std::string_view to_string(LambdaFamily family) {
  switch (family) {
    case LambdaFamily::k23: return "L23";
    case LambdaFamily::k13: return "L13";
    case LambdaFamily::k12_0: return "L12_0";
    case LambdaFamily::k12_1: return "L12_1";
  }
  return "?";
}

LambdaFamily parse_lambda_family(std::string_view tag) {
  std::string t(tag);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
  if (t == "L23") return LambdaFamily::k23;
  if (t == "L13") return LambdaFamily::k13;
  if (t == "L12_0") return LambdaFamily::k12_0;
  if (t == "L12_1") return LambdaFamily::k12_1;
  throw std::invalid_argument("unknown series family '" + std::string(tag) +
                              "' (expected L23, L13, L12_0 or L12_1)");
}

TruncatedEgf lambda_series(LambdaFamily family, unsigned i, const std::array<unsigned, 3>& w,
                           std::span<const Rational> y, unsigned order) {
  const Integer w1 = w[0];
  const Integer w2 = w[1];
  const Integer w3 = w[2];
  const Integer product = w1 * w2 * w3;

  switch (family) {
    case LambdaFamily::k23:
    case LambdaFamily::k13: {
      if (i > 3) throw std::invalid_argument("lambda_series: sub-index must be 0..3");
      if (y.size() != 3 - i) {
        throw std::invalid_argument("lambda_series: expected " + std::to_string(3 - i) +
                                    " y values, got " + std::to_string(y.size()));
      }
      if (i >= 1) {
        require_odd(w, "lambda_series");
      } else {
        require_positive(w, "lambda_series");
      }
      const Rational y_sum = std::accumulate(y.begin(), y.end(), Rational());
      TruncatedEgf num = egf_scale(egf_exp(Rational(product) * y_sum, order),
                                   Rational(pow(Integer(2), 3 - i)));
      num = egf_mul(num, egf_pow(exp_plus_one(product, order), i));
      const TruncatedEgf den =
          family == LambdaFamily::k23
              ? exp_plus_one(w2 * w3, order) * exp_plus_one(w1 * w3, order) *
                    exp_plus_one(w1 * w2, order)
              : exp_plus_one(w1, order) * exp_plus_one(w2, order) * exp_plus_one(w3, order);
      return egf_div(num, den);
    }
    case LambdaFamily::k12_0: {
      if (i != 0) throw std::invalid_argument("lambda_series: L12_0 takes sub-index 0");
      if (y.size() != 1) throw std::invalid_argument("lambda_series: L12_0 takes one y value");
      require_positive(w, "lambda_series");
      const Rational rate = Rational(w2 * w3 + w1 * w3 + w1 * w2) * y[0];
      const TruncatedEgf num = egf_scale(egf_exp(rate, order), Rational(8));
      return egf_div(num, exp_plus_one(w1, order) * exp_plus_one(w2, order) *
                              exp_plus_one(w3, order));
    }
    case LambdaFamily::k12_1: {
      if (i != 1) throw std::invalid_argument("lambda_series: L12_1 takes sub-index 1");
      if (!y.empty()) throw std::invalid_argument("lambda_series: L12_1 takes no y values");
      require_odd(w, "lambda_series");
      const TruncatedEgf num = exp_plus_one(w2 * w3, order) * exp_plus_one(w1 * w3, order) *
                               exp_plus_one(w1 * w2, order);
      return egf_div(num, exp_plus_one(w1, order) * exp_plus_one(w2, order) *
                              exp_plus_one(w3, order));
    }
  }
  throw std::invalid_argument("lambda_series: unknown family");
}

}  // namespace eulersym
