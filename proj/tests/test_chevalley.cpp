#include <gtest/gtest.h>

#include "magicrank/chevalley.hpp"

using namespace magicrank;

TEST(Nor, ValuesAndDegree) {
  for (unsigned n = 1; n <= 4; ++n) {
    auto t = nor_poly(n).table();
    auto a = and_poly(n).table();
    for (std::uint64_t i = 0; i < t.size(); ++i) {
      EXPECT_EQ(t.at(i), i == 0 ? TorusValue(2, 1, 0) : TorusValue(2));
      EXPECT_EQ(a.at(i), i + 1 == t.size() ? TorusValue(2, 1, 0) : TorusValue(2));
    }
    EXPECT_EQ(degree(nor_poly(n)), n);
  }
}

TEST(ChevalleyWarning, QuadricOverF3) {
  auto q = NonclassicalPoly::classical(3, 3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}});
  auto rep = chevalley_warning_check({q});
  EXPECT_TRUE(rep.degree_condition);
  EXPECT_TRUE(rep.divisible);
  EXPECT_EQ(rep.root_count % 3, 0u);
  EXPECT_TRUE(rep.vanish_at_origin);
  ASSERT_TRUE(rep.second_root.has_value());
  EXPECT_TRUE(q.evaluate(*rep.second_root).is_zero());
  EXPECT_TRUE(rep.consistent());
}

TEST(ChevalleyWarning, ConditionFailsWithoutSecondRoot) {
  // x1 + x2 + x1 x2 vanishes only at the origin; degree sum equals n
  auto q = NonclassicalPoly::classical(2, 2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}});
  auto rep = chevalley_warning_check({q});
  EXPECT_FALSE(rep.degree_condition);
  EXPECT_EQ(rep.root_count, 1u);
  EXPECT_FALSE(rep.second_root.has_value());
  EXPECT_TRUE(rep.consistent());
}

TEST(NorTheorem, ExhaustiveQuadrics) {
  auto rep = nor_rank_theorem_check(4, 3, 1);
  EXPECT_TRUE(rep.hypothesis);
  EXPECT_TRUE(rep.exhaustive);
  EXPECT_EQ(rep.family_size, 1024u);
  EXPECT_EQ(rep.tuples_checked, 1024u);
  EXPECT_TRUE(rep.holds());
}

TEST(NorTheorem, OutsideHypothesisFindsCounterexample) {
  auto rep = nor_rank_theorem_check(2, 3, 1);
  EXPECT_FALSE(rep.hypothesis);
  EXPECT_FALSE(rep.holds());
  EXPECT_TRUE(rep.counterexample.has_value());
}

TEST(ChevalleyWarning, RandomTuples) {
  auto s = chevalley_random_check(500, 9);
  EXPECT_EQ(s.tuples, 500u);
  EXPECT_EQ(s.consistent, 500u);
}
