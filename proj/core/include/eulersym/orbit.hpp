#pragma once

// Symbolic shapes of the expansion templates and the count of distinct
// expressions each yields under the six permutations of (w1, w2, w3).

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulersym/identities.hpp"

namespace eulersym {

enum class ExpansionTemplate { A0, A1_1, A1_2, A2_1, A2_2, A2_3, A3, C0, C1 };

inline constexpr std::array<ExpansionTemplate, 9> kAllTemplates = {
    ExpansionTemplate::A0,   ExpansionTemplate::A1_1, ExpansionTemplate::A1_2,
    ExpansionTemplate::A2_1, ExpansionTemplate::A2_2, ExpansionTemplate::A2_3,
    ExpansionTemplate::A3,   ExpansionTemplate::C0,   ExpansionTemplate::C1,
};

/// "a-0", "a-1(1)", "a-1(2)", "a-2(1)", "a-2(2)", "a-2(3)", "a-3", "c-0", "c-1".
std::string_view to_string(ExpansionTemplate t);
/// Throws std::invalid_argument for an unknown name.
ExpansionTemplate parse_template(std::string_view name);

/// The template a theorem's variants are permutations of, if any.
std::optional<ExpansionTemplate> template_of(FamilyId id);

/// One factor attached to a summation index. Indices into w are 0-based.
struct ShapeFactor {
  enum class Kind { kEuler, kAltSum };
  Kind kind;
  /// E: argument is w[base] * y[y_slot] + sum over shifts r of (w[base] / w[r]) * i_r,
  /// where i_r runs over an alternating sum of length w[r].
  /// T: argument is w[base] - 1.
  unsigned base;
  int y_slot = -1;
  std::vector<unsigned> shifts;
  /// w-indices raised to this summation index.
  std::vector<unsigned> weight;

  friend auto operator<=>(const ShapeFactor&, const ShapeFactor&) = default;
};

/// prefactor^n times a multinomial sum (over as many indices as factors)
/// of the product of factors.
struct ExpressionShape {
  std::vector<unsigned> prefactor;
  std::vector<ShapeFactor> factors;

  friend auto operator<=>(const ExpressionShape&, const ExpressionShape&) = default;
};

ExpressionShape template_shape(ExpansionTemplate t);

/// Relabels every w-index through sigma (index i becomes perm.slot[i]).
ExpressionShape permute(const ExpressionShape& shape, Perm perm);

/// Normal form under renaming the summation indices: sorted multisets.
ExpressionShape canonicalize(ExpressionShape shape);

/// Number of distinct canonical forms among the six permuted templates.
int orbit_audit(ExpansionTemplate t);
int orbit_audit(std::string_view template_name);

/// Shape of one of a theorem's listed variants, built from the template by
/// relabeling. Used to confirm the listed variants cover the orbit.
ExpressionShape variant_shape(FamilyId id, unsigned variant_index);

}  // namespace eulersym
