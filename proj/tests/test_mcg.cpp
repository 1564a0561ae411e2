#include "lenscontact/mcg.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace lenscontact {
namespace {

using G = Generator;

GroupDescription group(GroupTag tag, std::vector<G> gens, std::string note = {}) {
  return {tag, std::move(gens), std::move(note)};
}

TEST(SmoothMcg, Examples) {
  EXPECT_EQ(smooth_mcg(LensSpace(2, 1)), group(GroupTag::kTrivial, {}));
  EXPECT_EQ(smooth_mcg(LensSpace(7, 6)), group(GroupTag::kZ2, {G::kSigma}, "sigma = tau"));
  EXPECT_EQ(smooth_mcg(LensSpace(8, 3)), group(GroupTag::kZ2xZ2, {G::kSigma, G::kTau}));
  EXPECT_EQ(smooth_mcg(LensSpace(3, 1)), group(GroupTag::kZ2, {G::kTau}));
  EXPECT_EQ(smooth_mcg(LensSpace(7, 2)), group(GroupTag::kZ2, {G::kTau}));
}

TEST(ContactMcg, Examples) {
  EXPECT_EQ(contact_mcg(LensSpace(2, 1)).group.tag, GroupTag::kTrivial);
  EXPECT_EQ(contact_mcg(LensSpace(5, 4)).group, group(GroupTag::kZ2, {G::kSigma}));
  EXPECT_EQ(contact_mcg(LensSpace(8, 3)).group, group(GroupTag::kZ2, {G::kSigma}));
  EXPECT_EQ(contact_mcg(LensSpace(3, 1)).group.tag, GroupTag::kTrivial);
  EXPECT_EQ(contact_mcg(LensSpace(7, 2)).group.tag, GroupTag::kTrivial);
  EXPECT_TRUE(contact_mcg(LensSpace(8, 3)).identity_component_trivial);
}

TEST(ContactMcgRelTorus, Examples) {
  EXPECT_EQ(contact_mcg_rel_torus(LensSpace(2, 1)).tag, GroupTag::kZ2xZ2);
  EXPECT_EQ(contact_mcg_rel_torus(LensSpace(5, 2)).tag, GroupTag::kZ2);
  EXPECT_EQ(contact_mcg_rel_torus(LensSpace(8, 3)).tag, GroupTag::kZ2xZ2);
}

TEST(InclusionKernel, Examples) {
  EXPECT_EQ(inclusion_kernel(LensSpace(2, 1)).tag, GroupTag::kZ2xZ2);
  EXPECT_EQ(inclusion_kernel(LensSpace(3, 1)), group(GroupTag::kZ2, {G::kSigma}));
  EXPECT_EQ(inclusion_kernel(LensSpace(5, 2)).tag, GroupTag::kTrivial);
  EXPECT_EQ(inclusion_kernel(LensSpace(5, 4)), group(GroupTag::kZ2, {G::kSigmaTau}));
}

TEST(InclusionIsIso, Examples) {
  EXPECT_TRUE(inclusion_is_iso(LensSpace(2, 1)));
  EXPECT_TRUE(inclusion_is_iso(LensSpace(7, 6)));
  EXPECT_FALSE(inclusion_is_iso(LensSpace(8, 3)));
}

TEST(UnknotClasses, Examples) {
  EXPECT_EQ(unknot_classes(LensSpace(2, 1)).size(), 1u);
  EXPECT_EQ(unknot_classes(LensSpace(4, 3)).size(), 2u);
  EXPECT_EQ(unknot_classes(LensSpace(5, 2)).size(), 4u);
}

TEST(S1S2, GroupAndActions) {
  EXPECT_EQ(contact_mcg_s1s2(), group(GroupTag::kZxZ2, {G::kDelta, G::kEta}));
  EXPECT_FALSE(order(contact_mcg_s1s2()).has_value());
  EXPECT_EQ(delta_action(CoreOrientation::kPositive, 3), 4);
  EXPECT_EQ(delta_action(CoreOrientation::kNegative, 3), 2);
  EXPECT_EQ(eta_action(5), -5);
  EXPECT_EQ(eta_action(eta_action(-2)), -2);
}

TEST(GroupText, Format) {
  EXPECT_EQ(to_string(contact_mcg(LensSpace(8, 3)).group), "Z2 [sigma]");
  EXPECT_EQ(to_string(smooth_mcg(LensSpace(2, 1))), "trivial []");
  EXPECT_EQ(to_string(smooth_mcg(LensSpace(5, 4))), "Z2 [sigma] (sigma = tau)");
  EXPECT_EQ(to_string(inclusion_kernel(LensSpace(5, 4))), "Z2 [sigma*tau]");
  EXPECT_EQ(to_string(contact_mcg_s1s2()), "ZxZ2 [delta, eta]");
}

TEST(GroupDescription, ValidateRejectsWrongGeneratorCount) {
  EXPECT_THROW(validate(group(GroupTag::kZ2, {})), std::logic_error);
  EXPECT_THROW(validate(group(GroupTag::kTrivial, {G::kTau})), std::logic_error);
  EXPECT_NO_THROW(validate(contact_mcg_s1s2()));
}

TEST(McgTables, ConsistencyUpTo200) {
  for (const auto& [p, q] : oracle::lens_pairs(2, 200)) {
    const LensSpace lens(p, q);
    const GroupDescription smooth = smooth_mcg(lens);
    const GroupDescription contact = contact_mcg(lens).group;
    const GroupDescription rel = contact_mcg_rel_torus(lens);
    const GroupDescription kernel = inclusion_kernel(lens);
    for (const auto* g : {&smooth, &contact, &rel, &kernel}) ASSERT_NO_THROW(validate(*g));
    const int s = *order(smooth), c = *order(contact), r = *order(rel), k = *order(kernel);
    EXPECT_EQ(s % c, 0) << lens.str();
    const bool minus_one = (q + 1) % p == 0;
    EXPECT_EQ(inclusion_is_iso(lens), minus_one) << lens.str();
    EXPECT_EQ(s == c, minus_one) << lens.str();
    // The relative group surjects onto the smooth group.
    EXPECT_EQ(r, k * s) << lens.str();
    if (c > 1) {
      EXPECT_EQ((q * q) % p, 1 % p) << lens.str();
    }
  }
}

}  // namespace
}  // namespace lenscontact
