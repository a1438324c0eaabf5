#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "eulersym/orbit.hpp"

using eulersym::ExpansionTemplate;
using eulersym::FamilyId;
using eulersym::Perm;

namespace {

Perm perm1(int a, int b, int c) {
  return Perm{{static_cast<std::uint8_t>(a - 1), static_cast<std::uint8_t>(b - 1),
               static_cast<std::uint8_t>(c - 1)}};
}

eulersym::ExpressionShape canon(FamilyId id, Perm p) {
  // Shape of the family's first listed variant relabeled by p.
  return eulersym::canonicalize(eulersym::permute(eulersym::variant_shape(id, 0), p));
}

}  // namespace

TEST(OrbitAudit, Counts) {
  EXPECT_EQ(eulersym::orbit_audit("a-0"), 6);
  EXPECT_EQ(eulersym::orbit_audit("a-1(1)"), 6);
  EXPECT_EQ(eulersym::orbit_audit("a-1(2)"), 6);
  EXPECT_EQ(eulersym::orbit_audit("a-2(1)"), 3);
  EXPECT_EQ(eulersym::orbit_audit("a-2(2)"), 6);
  EXPECT_EQ(eulersym::orbit_audit("a-2(3)"), 3);
  EXPECT_EQ(eulersym::orbit_audit("a-3"), 1);
  EXPECT_EQ(eulersym::orbit_audit("c-0"), 2);
  EXPECT_EQ(eulersym::orbit_audit("c-1"), 2);
}

TEST(OrbitAudit, UnknownTemplate) {
  EXPECT_THROW(eulersym::orbit_audit("a-4"), std::invalid_argument);
  EXPECT_THROW(eulersym::parse_template(""), std::invalid_argument);
}

TEST(OrbitAudit, TemplateNamesRoundTrip) {
  for (ExpansionTemplate t : eulersym::kAllTemplates) {
    EXPECT_EQ(eulersym::parse_template(eulersym::to_string(t)), t);
  }
}

TEST(OrbitAudit, MatchesCatalogOrbitSizes) {
  for (FamilyId id : eulersym::kAllFamilies) {
    const auto t = eulersym::template_of(id);
    if (!t) continue;
    EXPECT_EQ(static_cast<unsigned>(eulersym::orbit_audit(*t)), eulersym::family(id).expected_orbit_size)
        << eulersym::to_string(id);
  }
  EXPECT_FALSE(eulersym::template_of(FamilyId::C10).has_value());
}

TEST(OrbitAudit, ListedVariantsCoverTheOrbit) {
  for (FamilyId id : eulersym::kAllFamilies) {
    const auto t = eulersym::template_of(id);
    if (!t) continue;
    const auto& f = eulersym::family(id);
    std::set<eulersym::ExpressionShape> listed;
    for (unsigned v = 0; v < f.variants.size(); ++v) {
      listed.insert(eulersym::canonicalize(eulersym::variant_shape(id, v)));
    }
    std::set<eulersym::ExpressionShape> orbit;
    for (const Perm& p : eulersym::kAllPerms) {
      orbit.insert(eulersym::canonicalize(eulersym::permute(eulersym::template_shape(*t), p)));
    }
    EXPECT_EQ(listed, orbit) << eulersym::to_string(id);
  }
}

TEST(OrbitAudit, CollapsingRelabelings) {
  // Three-factor form with one Euler factor: each transposition lands on a
  // cyclic representative.
  EXPECT_EQ(canon(FamilyId::T8, perm1(1, 3, 2)), canon(FamilyId::T8, perm1(1, 2, 3)));
  EXPECT_EQ(canon(FamilyId::T8, perm1(2, 1, 3)), canon(FamilyId::T8, perm1(2, 3, 1)));
  EXPECT_EQ(canon(FamilyId::T8, perm1(3, 2, 1)), canon(FamilyId::T8, perm1(3, 1, 2)));
  EXPECT_NE(canon(FamilyId::T8, perm1(1, 2, 3)), canon(FamilyId::T8, perm1(2, 3, 1)));

  // Pure alternating-sum expansion with cyclic weights: two classes.
  const auto f2 = canon(FamilyId::T17, perm1(1, 2, 3));
  const auto g2 = canon(FamilyId::T17, perm1(1, 3, 2));
  EXPECT_NE(f2, g2);
  EXPECT_EQ(canon(FamilyId::T17, perm1(2, 3, 1)), f2);
  EXPECT_EQ(canon(FamilyId::T17, perm1(3, 1, 2)), f2);
  EXPECT_EQ(canon(FamilyId::T17, perm1(3, 2, 1)), g2);
  EXPECT_EQ(canon(FamilyId::T17, perm1(2, 1, 3)), g2);
}

TEST(OrbitAudit, VariantShapeErrors) {
  EXPECT_THROW(eulersym::variant_shape(FamilyId::C10, 0), std::invalid_argument);
  EXPECT_THROW(eulersym::variant_shape(FamilyId::T8, 3), std::invalid_argument);
}
