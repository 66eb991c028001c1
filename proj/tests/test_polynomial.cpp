#include <gtest/gtest.h>

#include "magicrank/errors.hpp"
#include "magicrank/polynomial.hpp"

using namespace magicrank;

TEST(Polynomial, WeightDegreeAndDepth) {
  for (unsigned n = 1; n <= 3; ++n) {
    auto q = NonclassicalPoly::weight(2, n, 1);
    EXPECT_EQ(degree(q), 2u);
    EXPECT_EQ(depth(q), 1u);
    for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(degree(NonclassicalPoly::weight(2, n, k - 1)), k) << n << " " << k;
  }
  for (unsigned n = 1; n <= 2; ++n) EXPECT_EQ(degree(NonclassicalPoly::weight(3, n, 1)), 3u);
  EXPECT_TRUE(is_classical(NonclassicalPoly::weight(3, 2, 0)));
}

TEST(Polynomial, EvaluatesWeights) {
  auto q = NonclassicalPoly::weight(2, 3, 2);
  EXPECT_EQ(q.evaluate(FpVector(2, {1, 1, 0})), TorusValue(2, 2, 2));
  EXPECT_EQ(q.evaluate(FpVector(2, {1, 1, 1})), TorusValue(2, 3, 2));
  auto r = NonclassicalPoly::weight(3, 2, 1);
  EXPECT_EQ(r.evaluate(FpVector(3, {2, 2})), TorusValue(3, 4, 1));
}

TEST(Polynomial, InterpolationRoundTrip) {
  PolynomialFamily fam(2, 3, 3);
  for (std::uint64_t i = 0; i < fam.size(); i += 37) {
    auto q = fam.member(i);
    EXPECT_EQ(interpolate(q.table()), q) << i;
    EXPECT_EQ(NonclassicalPoly::parse(q.to_text()), q);
  }
  PolynomialFamily fam3(3, 2, 3);
  for (std::uint64_t i = 0; i < fam3.size(); i += 101) {
    auto q = fam3.member(i);
    EXPECT_EQ(interpolate(q.table()), q);
    EXPECT_LE(degree(q), 3u);
  }
}

TEST(Polynomial, InterpolationRespectsDegreeBudget) {
  auto t = NonclassicalPoly::weight(2, 2, 2).table();
  EXPECT_THROW(interpolate(t, 2u), std::invalid_argument);
  EXPECT_NO_THROW(interpolate(t, 3u));
}

TEST(Polynomial, DerivativeLowersDegree) {
  auto q = NonclassicalPoly::weight(2, 3, 1);
  auto d = additive_derivative(q, FpVector(2, {1, 0, 1}));
  EXPECT_LE(degree(d), 1u);
  auto dd = additive_derivative(additive_derivative(d, FpVector(2, {0, 1, 0})), FpVector(2, {1, 1, 0}));
  EXPECT_TRUE(dd.is_zero());
}

TEST(Polynomial, ExponentsMatchMembers) {
  PolynomialFamily fam(2, 2, 2);
  fam.prepare(8);
  std::vector<std::uint32_t> ex;
  for (std::uint64_t i = 0; i < fam.size(); ++i) {
    fam.exponents(i, 8, ex);
    auto t = fam.member(i).table();
    for (std::uint64_t x = 0; x < t.size(); ++x) EXPECT_EQ(ex[x], t.at(x).numerator_at(2));
  }
  PolynomialFamily empty(2, 0, 2);
  empty.prepare(8);
  empty.exponents(0, 8, ex);
  EXPECT_EQ(ex.size(), 1u);
}

TEST(Polynomial, RestrictionThroughAffineMap) {
  auto q = NonclassicalPoly::weight(2, 3, 1);
  AffineMap a(2, 1, 3, {FpVector(2, {1, 1, 0})}, FpVector(2, {0, 0, 1}));
  auto t = restrict(q, a);
  EXPECT_EQ(t.at(0), TorusValue(2, 1, 1));
  EXPECT_EQ(t.at(1), TorusValue(2, 3, 1));
}

TEST(Polynomial, MagicPolynomials) {
  EXPECT_EQ(magic_polynomial(2, 2), NonclassicalPoly::weight(2, 2, 2));
  EXPECT_EQ(magic_polynomial(3, 2), NonclassicalPoly::weight(3, 2, 1));
  auto c = magic_polynomial(5, 2, Cubic{1, 0, 0});
  EXPECT_TRUE(c.is_classical());
  EXPECT_EQ(degree(c), 3u);
  EXPECT_THROW(magic_polynomial(5, 1, Cubic{0, 1, 0}), std::invalid_argument);
}

TEST(Polynomial, DegreeScanBudget) {
  EXPECT_THROW(degree(NonclassicalPoly::weight(2, 5, 2).table()), BudgetExceeded);
}
