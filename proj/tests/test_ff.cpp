#include <gtest/gtest.h>

#include "magicrank/errors.hpp"
#include "magicrank/ff.hpp"
#include "magicrank/torus.hpp"

using namespace magicrank;

TEST(FpScalar, ReducesAndInverts) {
  EXPECT_EQ(FpScalar(5, -1).value(), 4u);
  EXPECT_EQ(FpScalar(7, 23).value(), 2u);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ((FpScalar(7, a) * FpScalar(7, a).inverse()).value(), 1u);
  EXPECT_THROW(FpScalar(7, 0).inverse(), std::logic_error);
  EXPECT_THROW(FpScalar(6, 1), std::invalid_argument);
}

TEST(FpVector, IndexIsLexicographic) {
  auto x = FpVector(3, {1, 0, 2});
  EXPECT_EQ(x.index(), 11u);
  EXPECT_EQ(FpVector::from_index(3, 3, 11), x);
  EXPECT_LT(FpVector::from_index(2, 3, 3), FpVector::from_index(2, 3, 4));
  EXPECT_EQ((x + x).index(), FpVector(3, {2, 0, 1}).index());
  EXPECT_EQ(x.dot(FpVector(3, {1, 1, 1})), 0u);
}

TEST(NatLift, Examples) {
  EXPECT_EQ(nat_lift(FpVector(2, {1, 0, 1})), 2u);
  EXPECT_EQ(nat_lift(FpScalar(3, 2)), 2u);
  EXPECT_EQ(nat_lift(FpVector(3, {2, 2, 1})), 5u);
}

TEST(LiftIdentities, F2Exhaustive) {
  auto s = lift_identity_f2(FpScalar(2, 1), FpScalar(2, 1));
  EXPECT_EQ(s.lhs, 0);
  EXPECT_EQ(s.rhs, 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      auto t = lift_identity_f2(FpScalar(2, a), FpScalar(2, b));
      EXPECT_EQ(t.lhs, t.rhs) << a << "," << b;
    }
  EXPECT_THROW(lift_identity_f2(FpScalar(3, 1), FpScalar(3, 1)), std::invalid_argument);
}

TEST(LiftIdentities, F3Exhaustive) {
  auto s = lift_identity_f3(FpScalar(3, 2), FpScalar(3, 2));
  EXPECT_EQ(s.lhs, 1);
  EXPECT_EQ(s.rhs, 1);
  auto u = lift_identity_f3(FpScalar(3, 1), FpScalar(3, 1));
  EXPECT_EQ(u.lhs, 2);
  EXPECT_EQ(u.rhs, 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      auto t = lift_identity_f3(FpScalar(3, a), FpScalar(3, b));
      EXPECT_EQ(t.lhs, t.rhs) << a << "," << b;
    }
}

TEST(Ipow, OverflowIsABudgetError) {
  EXPECT_EQ(ipow(3, 4), 81u);
  EXPECT_THROW(ipow(2, 70), BudgetExceeded);
}

TEST(Torus, AdditionExamples) {
  EXPECT_EQ(TorusValue(2, 1, 1) + TorusValue(2, 1, 1), TorusValue(2, 1, 0));
  EXPECT_EQ((TorusValue(2, 1, 1) + TorusValue(2, 1, 1)).depth(), 0u);
  EXPECT_EQ(TorusValue(2, 3, 1) + TorusValue(2, 1, 0), TorusValue(2, 1, 1));
  EXPECT_TRUE((TorusValue(3, 1, 1) + TorusValue(3, 8, 1)).is_zero());
  EXPECT_THROW(TorusValue(2, 1, 0) + TorusValue(3, 1, 0), std::invalid_argument);
}

TEST(Torus, NormalizationAndGroupLawsExhaustive) {
  for (std::uint32_t p : {2u, 3u}) {
    std::vector<TorusValue> all;
    for (unsigned k = 0; k <= 2; ++k)
      for (std::uint64_t a = 0; a < ipow(p, k + 1); ++a) all.emplace_back(p, static_cast<std::int64_t>(a), k);
    for (const auto& s : all) {
      EXPECT_EQ(TorusValue(p, static_cast<std::int64_t>(s.numerator()), s.depth()), s);
      EXPECT_EQ(s + TorusValue(p), s);
      EXPECT_TRUE((s + (-s)).is_zero());
      EXPECT_TRUE(s.numerator() % p != 0 || s.depth() == 0);
      for (const auto& t : all) {
        EXPECT_EQ(s + t, t + s);
        for (std::size_t i = 0; i < all.size(); i += 5) EXPECT_EQ((s + t) + all[i], s + (t + all[i]));
      }
    }
  }
}

TEST(Torus, TimesPAndText) {
  EXPECT_EQ(TorusValue(2, 3, 2).times_p(), TorusValue(2, 3, 1));
  EXPECT_TRUE(TorusValue(3, 1, 0).times_p().is_zero());
  EXPECT_EQ(TorusValue(2, 3, 2).to_string(), "3/8");
  EXPECT_EQ(TorusValue(3, -1, 1).to_string(), "8/9");
}
