#include "eulersym/orbit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace eulersym {

namespace {

using Kind = ShapeFactor::Kind;

ShapeFactor euler(unsigned base, int y_slot, std::vector<unsigned> shifts,
                  std::vector<unsigned> weight) {
  return {Kind::kEuler, base, y_slot, std::move(shifts), std::move(weight)};
}

ShapeFactor altsum(unsigned base, std::vector<unsigned> weight) {
  return {Kind::kAltSum, base, -1, {}, std::move(weight)};
}

// First displayed line of each theorem, i.e. the identity slot assignment.
ExpressionShape theorem_shape(FamilyId id) {
  switch (id) {
    case FamilyId::T1:
      return {{}, {euler(0, 0, {}, {1, 2}), euler(1, 1, {}, {0, 2}), euler(2, 2, {}, {0, 1})}};
    case FamilyId::T2:
      return {{}, {euler(0, 0, {}, {1, 2}), euler(1, 1, {}, {0, 2}), altsum(2, {0, 1})}};
    case FamilyId::T5:
      return {{0}, {euler(2, 0, {}, {1}), euler(1, 1, {0}, {2})}};
    case FamilyId::T8:
      return {{}, {euler(0, 0, {}, {1, 2}), altsum(1, {0, 2}), altsum(2, {0, 1})}};
    case FamilyId::T11:
      return {{0}, {euler(1, 0, {0}, {2}), altsum(2, {1})}};
    case FamilyId::T14:
      return {{0, 1}, {euler(2, 0, {0, 1}, {})}};
    case FamilyId::T16:
      return {{}, {euler(0, 0, {}, {2}), euler(1, 0, {}, {0}), euler(2, 0, {}, {1})}};
    case FamilyId::T17:
      return {{}, {altsum(0, {2}), altsum(1, {0}), altsum(2, {1})}};
    default:
      throw std::invalid_argument(std::string(to_string(id)) + " has no three-variable shape");
  }
}

}  // namespace

std::string_view to_string(ExpansionTemplate t) {
  switch (t) {
    case ExpansionTemplate::A0: return "a-0";
    case ExpansionTemplate::A1_1: return "a-1(1)";
    case ExpansionTemplate::A1_2: return "a-1(2)";
    case ExpansionTemplate::A2_1: return "a-2(1)";
    case ExpansionTemplate::A2_2: return "a-2(2)";
    case ExpansionTemplate::A2_3: return "a-2(3)";
    case ExpansionTemplate::A3: return "a-3";
    case ExpansionTemplate::C0: return "c-0";
    case ExpansionTemplate::C1: return "c-1";
  }
  return "?";
}

ExpansionTemplate parse_template(std::string_view name) {
  for (ExpansionTemplate t : kAllTemplates) {
    if (to_string(t) == name) return t;
  }
  throw std::invalid_argument("unknown expansion template '" + std::string(name) + "'");
}

std::optional<ExpansionTemplate> template_of(FamilyId id) {
  switch (id) {
    case FamilyId::T1: return ExpansionTemplate::A0;
    case FamilyId::T2: return ExpansionTemplate::A1_1;
    case FamilyId::T5: return ExpansionTemplate::A1_2;
    case FamilyId::T8: return ExpansionTemplate::A2_1;
    case FamilyId::T11: return ExpansionTemplate::A2_2;
    case FamilyId::T14: return ExpansionTemplate::A2_3;
    case FamilyId::T16: return ExpansionTemplate::C0;
    case FamilyId::T17: return ExpansionTemplate::C1;
    default: return std::nullopt;
  }
}

ExpressionShape template_shape(ExpansionTemplate t) {
  // Each expansion as displayed, written as a relabeling of the matching
  // theorem's first line.
  switch (t) {
    case ExpansionTemplate::A0: return theorem_shape(FamilyId::T1);
    case ExpansionTemplate::A1_1: return theorem_shape(FamilyId::T2);
    case ExpansionTemplate::A1_2: return permute(theorem_shape(FamilyId::T5), Perm{{2, 1, 0}});
    case ExpansionTemplate::A2_1: return theorem_shape(FamilyId::T8);
    case ExpansionTemplate::A2_2: return permute(theorem_shape(FamilyId::T11), Perm{{1, 0, 2}});
    case ExpansionTemplate::A2_3: return permute(theorem_shape(FamilyId::T14), Perm{{1, 2, 0}});
    case ExpansionTemplate::A3:
      return {{}, {altsum(0, {1, 2}), altsum(1, {0, 2}), altsum(2, {0, 1})}};
    case ExpansionTemplate::C0: return permute(theorem_shape(FamilyId::T16), Perm{{1, 2, 0}});
    case ExpansionTemplate::C1: return permute(theorem_shape(FamilyId::T17), Perm{{1, 2, 0}});
  }
  throw std::invalid_argument("unknown expansion template");
}

ExpressionShape permute(const ExpressionShape& shape, Perm perm) {
  auto relabel = [&](std::vector<unsigned> v) {
    for (auto& idx : v) idx = perm.slot[idx];
    return v;
  };
  ExpressionShape out;
  out.prefactor = relabel(shape.prefactor);
  for (const auto& f : shape.factors) {
    out.factors.push_back(
        {f.kind, perm.slot[f.base], f.y_slot, relabel(f.shifts), relabel(f.weight)});
  }
  return out;
}

ExpressionShape canonicalize(ExpressionShape shape) {
  std::sort(shape.prefactor.begin(), shape.prefactor.end());
  for (auto& f : shape.factors) {
    std::sort(f.shifts.begin(), f.shifts.end());
    std::sort(f.weight.begin(), f.weight.end());
  }
  std::sort(shape.factors.begin(), shape.factors.end());
  return shape;
}

int orbit_audit(ExpansionTemplate t) {
  const ExpressionShape base = template_shape(t);
  std::set<ExpressionShape> distinct;
  for (const Perm& p : kAllPerms) distinct.insert(canonicalize(permute(base, p)));
  return static_cast<int>(distinct.size());
}

int orbit_audit(std::string_view template_name) { return orbit_audit(parse_template(template_name)); }

ExpressionShape variant_shape(FamilyId id, unsigned variant_index) {
  const IdentityFamily& fam = family(id);
  if (variant_index >= fam.variants.size() || !fam.variants[variant_index].perm) {
    throw std::invalid_argument("variant_shape: no slot assignment for that variant");
  }
  return permute(theorem_shape(id), *fam.variants[variant_index].perm);
}

}  // namespace eulersym
