#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "eulersym/identities.hpp"

namespace eulersym {

namespace {

W3 as_w3(std::span<const unsigned> w) { return {w[0], w[1], w[2]}; }

template <std::size_t N>
std::array<Rational, N> as_y(std::span<const Rational> y) {
  std::array<Rational, N> out;
  std::copy_n(y.begin(), N, out.begin());
  return out;
}

// Theorem variants in listing order.
constexpr std::array<Perm, 6> kT1Order = kAllPerms;
constexpr std::array<Perm, 6> kT2Order = {{
    {{0, 1, 2}}, {{0, 2, 1}}, {{1, 0, 2}}, {{1, 2, 0}}, {{2, 1, 0}}, {{2, 0, 1}},
}};
constexpr std::array<Perm, 6> kSixOrder = kAllPerms;
constexpr std::array<Perm, 3> kCyclicOrder = {{{{0, 1, 2}}, {{1, 2, 0}}, {{2, 0, 1}}}};
constexpr std::array<Perm, 2> kPairOrder = {{{{0, 1, 2}}, {{0, 2, 1}}}};

template <typename Fn, std::size_t N>
std::vector<Variant> theorem_variants(const std::array<Perm, N>& order, Fn fn) {
  std::vector<Variant> out;
  for (const Perm& p : order) {
    out.push_back({p.str(), p, [p, fn](const EvalTables& t, unsigned n, std::span<const unsigned> w,
                                    std::span<const Rational> y) { return fn(t, p, n, w, y); }});
  }
  return out;
}

std::vector<Variant> corollary_variants(FamilyId id, unsigned count) {
  std::vector<Variant> out;
  for (unsigned v = 0; v < count; ++v) {
    out.push_back({"#" + std::to_string(v), std::nullopt,
                   [id, v](const EvalTables& t, unsigned n, std::span<const unsigned> w,
                           std::span<const Rational> y) {
                     return eval_corollary(t, id, v, n, w, y);
                   }});
  }
  return out;
}

std::vector<IdentityFamily> build_catalog() {
  using P = Parity;
  std::vector<IdentityFamily> c;

  c.push_back({FamilyId::T1, P::kAnyPositive, 3, 3, 6,
               theorem_variants(kT1Order, [](const EvalTables& t, Perm p, unsigned n, auto w, auto y) {
                 return eval_T1_variant(t, p, n, as_w3(w), as_y<3>(y));
               })});
  c.push_back({FamilyId::T2, P::kOddOnly, 3, 2, 6,
               theorem_variants(kT2Order, [](const EvalTables& t, Perm p, unsigned n, auto w, auto y) {
                 return eval_T2_variant(t, p, n, as_w3(w), as_y<2>(y));
               })});
  c.push_back({FamilyId::C3, P::kOddOnly, 2, 2, 6, corollary_variants(FamilyId::C3, 6)});
  c.push_back({FamilyId::C4, P::kOddOnly, 1, 2, 3, corollary_variants(FamilyId::C4, 3)});
  c.push_back({FamilyId::T5, P::kOddOnly, 3, 2, 6,
               theorem_variants(kSixOrder, [](const EvalTables& t, Perm p, unsigned n, auto w, auto y) {
                 return eval_T5_variant(t, p, n, as_w3(w), as_y<2>(y));
               })});
  c.push_back({FamilyId::C6, P::kOddOnly, 2, 2, 6, corollary_variants(FamilyId::C6, 6)});
  c.push_back({FamilyId::C7, P::kOddOnly, 1, 2, 3, corollary_variants(FamilyId::C7, 3)});
  c.push_back({FamilyId::T8, P::kOddOnly, 3, 1, 3,
               theorem_variants(kCyclicOrder, [](const EvalTables& t, Perm p, unsigned n, auto w, auto y) {
                 return eval_T8_variant(t, p, n, as_w3(w), y[0]);
               })});
  c.push_back({FamilyId::C9, P::kOddOnly, 2, 1, 3, corollary_variants(FamilyId::C9, 3)});
  c.push_back({FamilyId::C10, P::kOddOnly, 1, 1, 2, corollary_variants(FamilyId::C10, 2)});
  c.push_back({FamilyId::T11, P::kOddOnly, 3, 1, 6,
               theorem_variants(kSixOrder, [](const EvalTables& t, Perm p, unsigned n, auto w, auto y) {
                 return eval_T11_variant(t, p, n, as_w3(w), y[0]);
               })});
  c.push_back({FamilyId::C12, P::kOddOnly, 2, 1, 6, corollary_variants(FamilyId::C12, 6)});
  c.push_back({FamilyId::C13, P::kOddOnly, 1, 1, 3, corollary_variants(FamilyId::C13, 3)});
  c.push_back({FamilyId::T14, P::kOddOnly, 3, 1, 3,
               theorem_variants(kCyclicOrder, [](const EvalTables& t, Perm p, unsigned n, auto w, auto y) {
                 return eval_T14_variant(t, p, n, as_w3(w), y[0]);
               })});
  c.push_back({FamilyId::C15, P::kOddOnly, 2, 1, 3, corollary_variants(FamilyId::C15, 3)});
  c.push_back({FamilyId::T16, P::kAnyPositive, 3, 1, 2,
               theorem_variants(kPairOrder, [](const EvalTables& t, Perm p, unsigned n, auto w, auto y) {
                 return eval_T16_variant(t, p, n, as_w3(w), y[0]);
               })});
  c.push_back({FamilyId::T17, P::kOddOnly, 3, 0, 2,
               theorem_variants(kPairOrder, [](const EvalTables& t, Perm p, unsigned n, auto w, auto) {
                 return eval_T17_variant(t, p, n, as_w3(w));
               })});
  c.push_back({FamilyId::C18, P::kOddOnly, 2, 0, 2, corollary_variants(FamilyId::C18, 2)});

  std::vector<Variant> chain;
  for (unsigned v = 0; v < 8; ++v) {
    chain.push_back({"(" + std::to_string(8 + v) + ")", std::nullopt,
                     [v](const EvalTables& t, unsigned n, std::span<const unsigned> w,
                         std::span<const Rational> y) {
                       return eval_intro_chain(t, v, n, w[0], w[1], y[0]);
                     }});
  }
  // Symmetric in (w1, w2) only, so two distinct expressions under the swap.
  c.push_back({FamilyId::IntroChain, P::kOddOnly, 2, 1, 2, std::move(chain)});
  return c;
}

std::vector<unsigned> compose(const std::vector<unsigned>& first,
                              const std::vector<unsigned>& second) {
  std::vector<unsigned> out;
  for (unsigned idx : first) out.push_back(second.at(idx));
  return out;
}

std::vector<Specialization> build_specializations() {
  using F = FamilyId;
  // Theorem -> corollary at w3 = 1.
  const Specialization t2_c3{F::T2, F::C3, 1, {0, 5, 1, 3, 2, 4}};
  const Specialization t5_c6{F::T5, F::C6, 1, {2, 3, 4, 5, 1, 0}};
  const Specialization t8_c9{F::T8, F::C9, 1, {0, 1, 2}};
  const Specialization t11_c12{F::T11, F::C12, 1, {0, 4, 1, 5, 3, 2}};
  const Specialization t14_c15{F::T14, F::C15, 1, {2, 1, 0}};
  const Specialization t17_c18{F::T17, F::C18, 1, {0, 1}};
  // Corollary -> corollary at w2 = 1.
  const Specialization c3_c4{F::C3, F::C4, 1, {0, 1, 2, 2, 1, 0}};
  const Specialization c6_c7{F::C6, F::C7, 1, {1, 0, 2, 2, 0, 1}};
  const Specialization c9_c10{F::C9, F::C10, 1, {0, 1, 1}};
  const Specialization c12_c13{F::C12, F::C13, 1, {1, 0, 2, 0, 1, 2}};

  std::vector<Specialization> out{t2_c3, t5_c6, t8_c9, t11_c12, t14_c15, t17_c18,
                                  c3_c4, c6_c7, c9_c10, c12_c13};
  // Theorem -> corollary at w2 = w3 = 1.
  out.push_back({F::T2, F::C4, 2, compose(t2_c3.variant_map, c3_c4.variant_map)});
  out.push_back({F::T5, F::C7, 2, compose(t5_c6.variant_map, c6_c7.variant_map)});
  out.push_back({F::T8, F::C10, 2, compose(t8_c9.variant_map, c9_c10.variant_map)});
  out.push_back({F::T11, F::C13, 2, compose(t11_c12.variant_map, c12_c13.variant_map)});
  return out;
}

}  // namespace

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::T1: return "T1";
    case FamilyId::T2: return "T2";
    case FamilyId::C3: return "C3";
    case FamilyId::C4: return "C4";
    case FamilyId::T5: return "T5";
    case FamilyId::C6: return "C6";
    case FamilyId::C7: return "C7";
    case FamilyId::T8: return "T8";
    case FamilyId::C9: return "C9";
    case FamilyId::C10: return "C10";
    case FamilyId::T11: return "T11";
    case FamilyId::C12: return "C12";
    case FamilyId::C13: return "C13";
    case FamilyId::T14: return "T14";
    case FamilyId::C15: return "C15";
    case FamilyId::T16: return "T16";
    case FamilyId::T17: return "T17";
    case FamilyId::C18: return "C18";
    case FamilyId::IntroChain: return "INTRO";
  }
  return "?";
}

FamilyId parse_family_id(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return std::toupper(ch); });
  if (upper == "INTRO_CHAIN") upper = "INTRO";
  for (FamilyId id : kAllFamilies) {
    if (to_string(id) == upper) return id;
  }
  throw std::invalid_argument("unknown identity family '" + std::string(text) + "'");
}

bool is_corollary(FamilyId id) { return to_string(id).front() == 'C'; }

const std::vector<IdentityFamily>& family_catalog() {
  static const std::vector<IdentityFamily> catalog = build_catalog();
  return catalog;
}

const IdentityFamily& family(FamilyId id) {
  for (const auto& f : family_catalog()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("family not in catalog");
}

const std::vector<Specialization>& specializations() {
  static const std::vector<Specialization> table = build_specializations();
  return table;
}

VerificationReport verify_case(const IdentityFamily& family, const EvalTables& tables, unsigned n,
                               std::span<const unsigned> w, std::span<const Rational> y) {
  if (w.size() != family.w_arity || y.size() != family.y_arity) {
    throw std::invalid_argument("verify_case: parameter arity does not match family " +
                                std::string(to_string(family.id)));
  }
  VerificationReport report;
  report.family = family.id;
  report.n = n;
  report.w.assign(w.begin(), w.end());
  report.y.assign(y.begin(), y.end());
  report.variant_values.reserve(family.variants.size());
  for (const auto& variant : family.variants) {
    report.variant_values.push_back(variant.eval(tables, n, w, y));
  }
  const auto& values = report.variant_values;
  report.all_equal = std::all_of(values.begin(), values.end(),
                                 [&](const Rational& v) { return v == values.front(); });
  report.orbit_size_checked = family.id == FamilyId::IntroChain
                                  ? values.size() == 8
                                  : values.size() == family.expected_orbit_size;
  return report;
}

}  // namespace eulersym
