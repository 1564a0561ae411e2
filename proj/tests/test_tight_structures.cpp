#include "lenscontact/tight_structures.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

namespace lenscontact {
namespace {

TEST(EnumerateTight, Examples) {
  EXPECT_EQ(enumerate_tight(LensSpace(2, 1)).size(), 1u);
  EXPECT_EQ(enumerate_tight(LensSpace(3, 1)).size(), 2u);
  EXPECT_EQ(enumerate_tight(LensSpace(9, 2)).size(), 4u);
}

TEST(EnumerateTight, AllPlusFirstAndClassesDistinct) {
  for (const auto& [p, q] : oracle::lens_pairs(2, 40)) {
    const std::vector<ShuffleClass> classes = enumerate_tight(LensSpace(p, q));
    const std::string& first = classes.front().signs();
    EXPECT_EQ(first.find('-'), std::string::npos);
    std::set<std::string> seen;
    for (const ShuffleClass& c : classes) EXPECT_TRUE(seen.insert(c.signs()).second);
  }
}

TEST(CountTightLens, Examples) {
  EXPECT_EQ(count_tight_lens(LensSpace(4, 1)), 3);
  EXPECT_EQ(count_tight_lens(LensSpace(7, 3)), 2);
  for (int p = 2; p <= 30; ++p) EXPECT_EQ(count_tight_lens(LensSpace(p, p - 1)), 1);
}

TEST(CountTightLens, MatchesEnumeration) {
  for (const auto& [p, q] : oracle::lens_pairs(2, 100)) {
    const LensSpace lens(p, q);
    EXPECT_EQ(Integer(enumerate_tight(lens).size()), count_tight_lens(lens)) << lens.str();
  }
}

TEST(CountTightSolid, Examples) {
  EXPECT_EQ(count_tight_solid(ExtRat(-1)), 1);
  EXPECT_EQ(count_tight_solid(ExtRat(-3, 2)), 2);
  EXPECT_EQ(count_tight_solid(ExtRat(-2)), 1);
  EXPECT_THROW(count_tight_solid(ExtRat::infinity()), std::domain_error);
}

TEST(CountTightSolid, IntegerSlopesAreUnique) {
  for (int n = -30; n <= 30; ++n) EXPECT_EQ(count_tight_solid(ExtRat(n)), 1) << n;
}

TEST(ShuffleBlocks, Examples) {
  // L(9,2): one block of three decorated edges.
  const auto nine_two = shuffle_blocks(lens_geodesic(LensSpace(9, 2)));
  ASSERT_EQ(nine_two.size(), 1u);
  EXPECT_EQ(nine_two[0].length, 3u);
  // L(12,5): two separate edges.
  const auto twelve_five = shuffle_blocks(lens_geodesic(LensSpace(12, 5)));
  ASSERT_EQ(twelve_five.size(), 2u);
  EXPECT_EQ(twelve_five[0].length, 1u);
  EXPECT_EQ(twelve_five[1].length, 1u);
  // L(11,4): -11/4 = [-3,-4], visited as blocks of 2 then 1.
  const auto eleven_four = shuffle_blocks(lens_geodesic(LensSpace(11, 4)));
  ASSERT_EQ(eleven_four.size(), 2u);
  EXPECT_EQ(eleven_four[0].length, 2u);
  EXPECT_EQ(eleven_four[1].length, 1u);
  EXPECT_THROW(shuffle_blocks(FareyPath{{ExtRat(-1), ExtRat(0)}}), std::invalid_argument);
}

TEST(ShuffleBlocks, ProductMatchesContinuedFraction) {
  for (const auto& [p, q] : oracle::lens_pairs(2, 100)) {
    const LensSpace lens(p, q);
    Integer product = 1;
    std::size_t covered = 0;
    for (const ShuffleBlock& b : shuffle_blocks(lens_geodesic(lens))) {
      EXPECT_EQ(b.first, covered);
      covered += b.length;
      product *= b.length + 1;
    }
    EXPECT_EQ(product, count_tight_lens(lens)) << lens.str();
  }
}

TEST(ClassifySigns, AgreesWithBruteForceGrouping) {
  for (const auto& [p, q] : oracle::lens_pairs(2, 45)) {
    const LensSpace lens(p, q);
    if (lens_geodesic(lens).vertices.size() - 3 > 12) continue;
    const auto brute = oracle::brute_shuffle_classes(p, q);
    EXPECT_EQ(brute.size(), enumerate_tight(lens).size()) << lens.str();
    std::set<std::string> normal_forms;
    for (const auto& [key, members] : brute) {
      const std::string rep = classify_signs(lens, members.front()).signs();
      for (const std::string& s : members) {
        EXPECT_EQ(classify_signs(lens, s).signs(), rep) << lens.str() << " " << s;
      }
      EXPECT_TRUE(normal_forms.insert(rep).second) << lens.str();
    }
  }
}

TEST(ClassifySigns, NormalFormPutsPlusFirstInEachBlock) {
  const ShuffleClass c = classify_signs(LensSpace(9, 2), "-+-");
  EXPECT_EQ(c.signs(), "+--");
  EXPECT_EQ(c.blocks[0].minus_count, 2u);
}

TEST(ClassifySigns, Errors) {
  EXPECT_THROW(classify_signs(LensSpace(9, 2), "++"), std::invalid_argument);
  EXPECT_THROW(classify_signs(LensSpace(9, 2), "+x-"), std::invalid_argument);
  EXPECT_NO_THROW(classify_signs(LensSpace(2, 1), ""));
}

TEST(UniversallyTight, Examples) {
  EXPECT_TRUE(is_universally_tight(classify_signs(LensSpace(3, 1), "+")));
  EXPECT_TRUE(is_universally_tight(classify_signs(LensSpace(3, 1), "-")));
  EXPECT_FALSE(is_universally_tight(classify_signs(LensSpace(9, 2), "++-")));
  EXPECT_TRUE(is_universally_tight(classify_signs(LensSpace(2, 1), "")));
}

TEST(UniversallyTight, CountsOverEnumeration) {
  for (const auto& [p, q] : oracle::lens_pairs(2, 60)) {
    const LensSpace lens(p, q);
    std::size_t count = 0;
    for (const ShuffleClass& c : enumerate_tight(lens)) count += is_universally_tight(c) ? 1 : 0;
    EXPECT_EQ(count, lens.q_is_minus_one() ? 1u : 2u) << lens.str();
  }
}

TEST(StandardStructures, Examples) {
  EXPECT_EQ(standard_structures(LensSpace(2, 1)).size(), 1u);
  EXPECT_EQ(standard_structures(LensSpace(5, 2)).size(), 2u);
  EXPECT_EQ(standard_structures(LensSpace(7, 6)).size(), 1u);
  const auto both = standard_structures(LensSpace(9, 2));
  EXPECT_EQ(both[0].signs(), "+++");
  EXPECT_EQ(both[1].signs(), "---");
}

TEST(StandardStructures, QMinusOneHasNoDecoratedEdges) {
  for (int p = 2; p <= 50; ++p) {
    const LensSpace lens(p, p - 1);
    EXPECT_EQ(lens_geodesic(lens).vertices.size(), 3u);
    EXPECT_EQ(enumerate_tight(lens).size(), 1u);
  }
}

}  // namespace
}  // namespace lenscontact
