#include <gtest/gtest.h>

#include "magicrank/cyclo.hpp"
#include "magicrank/cyclo_linalg.hpp"
#include "magicrank/interval.hpp"

using namespace magicrank;

TEST(Cyclotomic, PolynomialCoefficients) {
  EXPECT_EQ(cyclotomic_polynomial(8), (std::vector<std::int64_t>{1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), (std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(5), (std::vector<std::int64_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(default_root_order(2), 8u);
  EXPECT_EQ(default_root_order(3), 9u);
  EXPECT_EQ(default_root_order(7), 7u);
}

TEST(Cyclotomic, RootsSumToZero) {
  for (unsigned m : {3u, 4u, 5u, 8u, 9u, 25u}) {
    CycloNumber s = CycloNumber::zero(m);
    for (unsigned k = 0; k < m; ++k) s += CycloNumber::root(m, k);
    EXPECT_TRUE(s.is_zero()) << m;
    EXPECT_EQ(CycloNumber::root(m, m), CycloNumber::one(m));
    EXPECT_EQ(CycloNumber::root(m, -1), CycloNumber::root(m, m - 1));
  }
}

TEST(Cyclotomic, FieldOperations) {
  unsigned m = 8;
  auto z = CycloNumber::root(m, 1) + CycloNumber::rational(m, mpq_class(1, 3));
  EXPECT_EQ(z * z.inverse(), CycloNumber::one(m));
  EXPECT_EQ(z.conj().conj(), z);
  EXPECT_TRUE(z.abs2().conj() == z.abs2());
  EXPECT_EQ(CycloNumber::root(m, 3).root_exponent(), 3);
  EXPECT_EQ(z.root_exponent(), -1);
  EXPECT_EQ(CycloNumber::root(m, 1).galois(3), CycloNumber::root(m, 3));
  EXPECT_GT(z.norm(), 0);
  EXPECT_EQ(CycloNumber::parse(z.to_string()), z);
  // zeta_8 + zeta_8^-1 = sqrt 2, so its square is 2
  auto s = CycloNumber::root(m, 1) + CycloNumber::root(m, -1);
  EXPECT_EQ(s * s, CycloNumber::rational(m, 2));
}

TEST(Cyclotomic, HistogramAndAccumulator) {
  std::vector<std::int64_t> h{2, 0, 1, 0, 0, 0, 0, 0, 0};
  auto a = CycloNumber::from_histogram(9, h);
  CycloAccumulator acc(9);
  acc.add_root(0);
  acc.add_root(9);
  acc.add_root(2);
  EXPECT_EQ(acc.result(), a);
}

TEST(Interval, CertifiedSignsAndComparisons) {
  auto sqrt2 = CycloNumber::root(8, 1) + CycloNumber::root(8, -1);
  EXPECT_EQ(certified_sign(sqrt2), 1);
  EXPECT_EQ(certified_sign(-sqrt2), -1);
  EXPECT_EQ(certified_sign(CycloNumber::zero(8)), 0);
  EXPECT_EQ(compare_real(sqrt2, mpq_class(141421, 100000)), 1);
  EXPECT_EQ(compare_real(sqrt2, mpq_class(141422, 100000)), -1);
  EXPECT_EQ(compare_real(sqrt2 * sqrt2, mpq_class(2)), 0);
  auto r = real_part(sqrt2);
  EXPECT_GT(r.lo(), 1.4142135623);
  EXPECT_LT(r.hi(), 1.4142135624);
  auto c = RealInterval::cos_two_pi(1, 6, 64);
  EXPECT_LE(c.lo(), 0.5);
  EXPECT_GE(c.hi(), 0.5);
}

TEST(CycloLinalg, SolveInSpan) {
  unsigned m = 8;
  auto one = CycloNumber::one(m);
  auto z = CycloNumber::root(m, 1);
  std::vector<std::vector<CycloNumber>> cols{{one, z}, {z, one}};
  std::vector<CycloNumber> target{one + z * z, z + z};
  auto c = solve_in_span(cols, target);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(cols[0][0] * (*c)[0] + cols[1][0] * (*c)[1], target[0]);
  EXPECT_EQ(cols[0][1] * (*c)[0] + cols[1][1] * (*c)[1], target[1]);
  EXPECT_EQ(cyclo_rank(cols), 2u);
  std::vector<std::vector<CycloNumber>> dep{{one, z}, {z, z * z}};
  EXPECT_EQ(cyclo_rank(dep), 1u);
  EXPECT_FALSE(solve_in_span(dep, {one, one}).has_value());
}
