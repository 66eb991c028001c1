#include <gtest/gtest.h>

#include <random>

#include "magicrank/fourier.hpp"

using namespace magicrank;

namespace {

// (2 + sqrt 2) / 4, the best single-qubit overlap of e(x/8) with a quadratic phase
CycloNumber best_single() {
  auto s2 = CycloNumber::root(8, 1) + CycloNumber::root(8, -1);
  return CycloNumber::rational(8, mpq_class(1, 2)) + s2 * mpq_class(1, 4);
}

PhaseTable random_table(std::mt19937_64& rng, std::uint32_t p, unsigned n, unsigned m) {
  std::vector<CycloNumber> v;
  for (std::uint64_t i = 0; i < ipow(p, n); ++i) v.push_back(CycloNumber::root(m, rng() % m));
  return PhaseTable(p, n, m, v);
}

}  // namespace

TEST(Fourier, PhaseOfTorusValue) {
  EXPECT_EQ(phase(TorusValue(2, 1, 2), 8), CycloNumber::root(8, 1));
  EXPECT_EQ(phase(TorusValue(3, 1, 0), 9), CycloNumber::root(9, 3));
  EXPECT_THROW(phase(TorusValue(2, 1, 3), 8), std::invalid_argument);
}

TEST(Fourier, InverseRoundTripAndParseval) {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 2; ++n) {
      unsigned m = default_root_order(p);
      auto f = random_table(rng, p, n, m), g = random_table(rng, p, n, m);
      auto fh = fourier_transform(f), gh = fourier_transform(g);
      EXPECT_EQ(inverse_fourier_transform(fh), f);
      EXPECT_EQ(inner_product(f, g), dual_inner_product(fh, gh));
    }
}

TEST(Fourier, CharacterHasSingleCoefficient) {
  // e(<a, x>/p) transforms to a delta at -a
  std::vector<TorusValue> vals;
  auto a = FpVector(3, {1, 2});
  for (std::uint64_t i = 0; i < 9; ++i) vals.emplace_back(3, a.dot(FpVector::from_index(3, 2, i)), 0);
  auto hat = fourier_transform(PhaseTable::of(FunctionTable(3, 2, vals), 9));
  for (std::uint64_t i = 0; i < 9; ++i)
    EXPECT_EQ(hat.at(i).is_zero(), i != (-a).index()) << i;
  EXPECT_EQ(hat.at((-a).index()), CycloNumber::one(9));
}

TEST(Fourier, LovettOnSamples) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 30; ++it) {
    unsigned n = 1 + it % 3;
    std::vector<TorusValue> a, b;
    for (std::uint64_t i = 0; i < ipow(2, n); ++i) {
      a.emplace_back(2, rng() % 8, 2);
      b.emplace_back(2, rng() % 8, 2);
    }
    auto rep = lovett_check(FunctionTable(2, n, a), FunctionTable(2, n, b), 8);
    EXPECT_TRUE(rep.holds);
    EXPECT_GE(compare_real(rep.rhs.exact, rep.lhs.exact), 0);
  }
}

TEST(Fourier, MagicScanMatchesProductOracle) {
  CycloNumber want = CycloNumber::one(8);
  for (unsigned n = 1; n <= 3; ++n) {
    want = want * best_single();
    auto s = quadratic_scan(magic_polynomial(2, n));
    EXPECT_EQ(s.max_corr_sq.exact, want) << n;
    auto w = magic_polynomial(2, n);
    auto c = correlation_sq(PhaseTable::of(w, 8), PhaseTable::of(s.argmax, 8));
    EXPECT_EQ(c.exact, want);
  }
}

TEST(Fourier, MagicBoundReport) {
  auto rep = magic_correlation_bound(2, 3);
  ASSERT_EQ(rep.entries.size(), 3u);
  EXPECT_TRUE(rep.holds);
  EXPECT_TRUE(rep.strictly_decreasing);
  EXPECT_EQ(*rep.entries[2].bound_rhs, mpq_class(27, 64));
  auto odd = magic_correlation_bound(3, 2);
  EXPECT_TRUE(odd.strictly_decreasing);
  EXPECT_FALSE(odd.entries[0].bound_rhs.has_value());
}

TEST(Fourier, ScanTieBreakPrefersSmallestIndex) {
  // a quadratic correlates perfectly with itself and nothing else of the same class
  auto q = NonclassicalPoly::weight(2, 2, 1);
  auto s = quadratic_scan(q);
  EXPECT_EQ(s.max_corr_sq.exact, CycloNumber::one(s.max_corr_sq.exact.m()));
  auto c = correlation_sq(PhaseTable::of(q, 8), PhaseTable::of(s.argmax, 8));
  EXPECT_EQ(c.exact, CycloNumber::one(8));
}
