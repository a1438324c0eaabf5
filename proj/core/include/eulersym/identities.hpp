#pragma once

// Finite evaluators for the identities of symmetry in (w1, w2, w3) satisfied
// by Euler polynomials and alternating power sums, their w3 = 1 and
// w2 = w3 = 1 specializations, and the eight-way chain in two variables.
//
// Every listed expression has its own evaluator. A family is verified by
// evaluating each of its expressions independently and comparing the exact
// values.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulersym/altsum.hpp"
#include "eulersym/euler.hpp"
#include "eulersym/exact.hpp"

namespace eulersym {

using W3 = std::array<unsigned, 3>;

/// A slot assignment (a, b, c): each entry is a 0-based position into the
/// w tuple. The identity (0, 1, 2) reproduces the unpermuted expression.
struct Perm {
  std::array<std::uint8_t, 3> slot;

  unsigned a() const { return slot[0]; }
  unsigned b() const { return slot[1]; }
  unsigned c() const { return slot[2]; }

  /// 1-based, e.g. "(2,3,1)".
  std::string str() const;

  friend bool operator==(const Perm&, const Perm&) = default;
};

inline constexpr std::array<Perm, 6> kAllPerms = {{
    {{0, 1, 2}}, {{0, 2, 1}}, {{1, 0, 2}}, {{1, 2, 0}}, {{2, 0, 1}}, {{2, 1, 0}},
}};

/// Read-only Euler and alternating-sum tables shared by all evaluators in a
/// run. T_k(j) is available for k <= max_degree and j <= max_w.
class EvalTables {
 public:
  EvalTables(unsigned max_degree, unsigned max_w);

  unsigned max_degree() const { return euler_.max_degree(); }
  unsigned max_w() const { return altsum_.n_max(); }

  Rational E(unsigned n, const Rational& x) const { return euler_.eval(n, x); }
  const Rational& T(unsigned k, unsigned j) const { return altsum_.at(k, j); }

  const EulerTable& euler() const { return euler_; }
  const AltPowerSumTable& altsum() const { return altsum_; }

 private:
  EulerTable euler_;
  AltPowerSumTable altsum_;
};

// Theorem evaluators. Each computes the displayed expression with
// (w1, w2, w3) relabeled as (w_a, w_b, w_c) = (w[perm.a()], w[perm.b()],
// w[perm.c()]). Odd-only evaluators throw std::invalid_argument on an even
// or zero w component.

/// sum C(n;k,l,m) E_k(w_a y1) E_l(w_b y2) E_m(w_c y3) w_a^{l+m} w_b^{k+m} w_c^{k+l}.
/// Any positive w.
Rational eval_T1_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                         const std::array<Rational, 3>& y);

/// sum C(n;k,l,m) E_k(w_a y1) E_l(w_b y2) T_m(w_c - 1) w_a^{l+m} w_b^{k+m} w_c^{k+l}.
Rational eval_T2_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                         const std::array<Rational, 2>& y);

/// w_a^n sum_k C(n,k) E_k(w_c y1) sum_{i<w_a} (-1)^i E_{n-k}(w_b y2 + (w_b/w_a) i)
/// w_c^{n-k} w_b^k.
Rational eval_T5_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                         const std::array<Rational, 2>& y);

/// sum C(n;k,l,m) E_k(w_a y1) T_l(w_b - 1) T_m(w_c - 1) w_a^{l+m} w_b^{k+m} w_c^{k+l}.
/// The listed variants are the three cyclic perms; the transpositions
/// give the l <-> m relabeled forms.
Rational eval_T8_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                         const Rational& y1);

/// w_a^n sum_k C(n,k) sum_{i<w_a} (-1)^i E_k(w_b y1 + (w_b/w_a) i) T_{n-k}(w_c - 1)
/// w_b^{n-k} w_c^k.
Rational eval_T11_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                          const Rational& y1);

/// (w_a w_b)^n sum_{i<w_a} sum_{j<w_b} (-1)^{i+j} E_n(w_c y1 + (w_c/w_a) i + (w_c/w_b) j).
Rational eval_T14_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                          const Rational& y1);

/// sum C(n;k,l,m) E_k(w_a y) E_l(w_b y) E_m(w_c y) w_c^k w_a^l w_b^m. Any positive w.
Rational eval_T16_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w,
                          const Rational& y);

/// sum C(n;k,l,m) T_k(w_a - 1) T_l(w_b - 1) T_m(w_c - 1) w_c^k w_a^l w_b^m.
Rational eval_T17_variant(const EvalTables& tables, Perm perm, unsigned n, const W3& w);

/// sum C(n;k,l,m) T_k(w1 - 1) T_l(w2 - 1) T_m(w3 - 1) w1^{l+m} w2^{k+m} w3^{k+l}:
/// the fully symmetric expansion with no identity content.
Rational eval_a3_expansion(const EvalTables& tables, unsigned n, const W3& w);

enum class FamilyId {
  T1, T2, C3, C4, T5, C6, C7, T8, C9, C10, T11, C12, C13, T14, C15, T16, T17, C18, IntroChain,
};

inline constexpr std::array<FamilyId, 19> kAllFamilies = {
    FamilyId::T1,  FamilyId::T2,  FamilyId::C3,  FamilyId::C4,  FamilyId::T5,
    FamilyId::C6,  FamilyId::C7,  FamilyId::T8,  FamilyId::C9,  FamilyId::C10,
    FamilyId::T11, FamilyId::C12, FamilyId::C13, FamilyId::T14, FamilyId::C15,
    FamilyId::T16, FamilyId::T17, FamilyId::C18, FamilyId::IntroChain,
};

std::string_view to_string(FamilyId id);
/// "T1" .. "C18", "INTRO" (case-insensitive). Throws std::invalid_argument.
FamilyId parse_family_id(std::string_view text);
bool is_corollary(FamilyId id);

/// Expression `variant_index` of a corollary's equality chain, numbered in
/// display order. w holds (w1) or (w1, w2) and y holds the corollary's
/// y-arguments. Throws std::invalid_argument on a non-corollary id, an
/// out-of-range index, an arity mismatch or an even w.
Rational eval_corollary(const EvalTables& tables, FamilyId id, unsigned variant_index, unsigned n,
                        std::span<const unsigned> w, std::span<const Rational> y);

/// The two-variable chain of eight equal expressions; odd w1, w2.
Rational eval_intro_chain(const EvalTables& tables, unsigned variant_index, unsigned n,
                          unsigned w1, unsigned w2, const Rational& y1);

enum class Parity { kAnyPositive, kOddOnly };

using VariantEvaluator = std::function<Rational(const EvalTables&, unsigned n,
                                                std::span<const unsigned> w,
                                                std::span<const Rational> y)>;

struct Variant {
  std::string label;
  /// Slot assignment for theorem variants; empty for corollary chains.
  std::optional<Perm> perm;
  VariantEvaluator eval;
};

struct IdentityFamily {
  FamilyId id;
  Parity parity;
  unsigned w_arity;
  unsigned y_arity;
  /// Distinct expressions the family lists; equals variants.size() except
  /// for the eight-way chain.
  unsigned expected_orbit_size;
  std::vector<Variant> variants;
};

/// All families in sweep order.
const std::vector<IdentityFamily>& family_catalog();
const IdentityFamily& family(FamilyId id);

/// Expression `child_index` of `child` equals expression `parent_index` of
/// `parent` once the trailing `ones` w-components of the parent are set to 1.
struct Specialization {
  FamilyId parent;
  FamilyId child;
  unsigned ones;
  /// variant_map[parent_index] = child_index.
  std::vector<unsigned> variant_map;
};

/// Theorem -> corollary at w3 = 1, corollary -> corollary at w2 = 1, and the
/// composed theorem -> corollary maps at w2 = w3 = 1.
const std::vector<Specialization>& specializations();

struct VerificationReport {
  FamilyId family;
  unsigned n = 0;
  std::vector<unsigned> w;
  std::vector<Rational> y;
  std::vector<Rational> variant_values;
  bool all_equal = false;
  bool orbit_size_checked = false;
  /// Set when the sweep also extracted the matching series coefficient.
  std::optional<Rational> series_value;
};

/// Evaluates every variant and compares each against variant 0.
VerificationReport verify_case(const IdentityFamily& family, const EvalTables& tables, unsigned n,
                               std::span<const unsigned> w, std::span<const Rational> y);

}  // namespace eulersym
