// Sanity checks of the reference implementations against hand-known values.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skewhecke/standard_contexts.hpp"

using namespace skh;

TEST(Oracles, Fractions) {
  EXPECT_EQ(oracle::Frac(1, 2) + oracle::Frac(1, 3), oracle::Frac(5, 6));
  EXPECT_EQ(oracle::Frac(2, -4), oracle::Frac(-1, 2));
  EXPECT_EQ(oracle::Frac(3, 4) / oracle::Frac(3, 8), oracle::Frac(2));
}

TEST(Oracles, Permutations) {
  EXPECT_EQ(oracle::all_permutations(4).size(), 24u);
  oracle::Perm a = {1, 2, 0};
  EXPECT_EQ(oracle::compose(a, oracle::invert(a)), (oracle::Perm{0, 1, 2}));
}

TEST(Oracles, DoubleCosetCounts) {
  auto s3 = symmetric_group(3);
  auto s2 = subgroup_by_names(s3, {"(12)"});
  EXPECT_EQ(oracle::left_cosets(*s3, s2.elements()).size(), 3u);
  EXPECT_EQ(oracle::double_cosets(*s3, s2.elements()).size(), 2u);
  auto s4 = symmetric_group(4);
  // S3 in S4 has double cosets of sizes 6 and 18; D4 has 2 double cosets; S2 has 7.
  EXPECT_EQ(oracle::double_cosets(*s4, subgroup_by_names(s4, {"(12)", "(23)"}).elements()).size(), 2u);
  EXPECT_EQ(oracle::double_cosets(*s4, subgroup_by_names(s4, {"(1234)", "(13)"}).elements()).size(), 2u);
  EXPECT_EQ(oracle::double_cosets(*s4, subgroup_by_names(s4, {"(12)"}).elements()).size(), 7u);
}

TEST(Oracles, ClassicalConstantsOfS3) {
  auto s3 = symmetric_group(3);
  auto c = oracle::classical_constants(*s3, subgroup_by_names(s3, {"(12)"}).elements());
  // The double coset of the identity comes first.
  EXPECT_EQ(c[1][1][0], oracle::Frac(2));
  EXPECT_EQ(c[1][1][1], oracle::Frac(1));
  EXPECT_EQ(c[0][1][1], oracle::Frac(1));
  EXPECT_EQ(c[0][0][1], oracle::Frac(0));
}
