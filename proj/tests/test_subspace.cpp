#include <gtest/gtest.h>

#include <random>

#include "magicrank/fp_linalg.hpp"
#include "magicrank/subspace.hpp"

using namespace magicrank;

namespace {

AffineSubspace random_subspace(std::mt19937_64& rng, std::uint32_t p, unsigned n) {
  std::vector<FpVector> gens;
  unsigned k = rng() % (n + 1);
  for (unsigned i = 0; i < k; ++i) gens.push_back(FpVector::from_index(p, n, rng() % ipow(p, n)));
  return AffineSubspace(FpVector::from_index(p, n, rng() % ipow(p, n)), gens);
}

}  // namespace

TEST(Linalg, RrefAndNullspace) {
  std::vector<FpVector> rows{FpVector(3, {1, 2, 0}), FpVector(3, {2, 1, 0}), FpVector(3, {0, 0, 1})};
  auto e = rref(rows, 3, 3);
  EXPECT_EQ(e.rows.size(), 2u);
  EXPECT_EQ(e.pivots, (std::vector<unsigned>{0, 2}));
  auto ns = nullspace(rows, 3, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& r : rows) EXPECT_EQ(r.dot(ns[0]), 0u);
  EXPECT_FALSE(solve_particular({FpVector(2, {1, 1}), FpVector(2, {1, 1})}, {0, 1}, 2, 2).has_value());
}

TEST(Subspace, CanonicalFormIsUnique) {
  AffineSubspace a(FpVector(2, {1, 0, 0}), {FpVector(2, {1, 1, 0}), FpVector(2, {0, 1, 0})});
  AffineSubspace b(FpVector(2, {0, 1, 0}), {FpVector(2, {1, 0, 0}), FpVector(2, {1, 1, 0}), FpVector(2, {0, 1, 0})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(AffineSubspace::parse(a.to_text()), a);
}

TEST(Subspace, RandomInvariants) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    std::uint32_t p = it % 2 ? 3 : 2;
    unsigned n = 1 + rng() % 4;
    auto h = random_subspace(rng, p, n);
    auto pts = h.points();
    EXPECT_EQ(pts.size(), h.size());
    auto param = parametrize(h);
    auto [rows, rhs] = h.equations();
    EXPECT_EQ(rows.size(), h.codim());
    auto back = AffineSubspace::from_equations(rows, rhs, p, n);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, h);
    for (std::uint64_t i = 0; i < pts.size(); ++i) {
      EXPECT_TRUE(membership(h, pts[i]));
      EXPECT_EQ(param(FpVector::from_index(p, h.dim(), i)), pts[i]);
      EXPECT_EQ(param(h.coordinates(pts[i])), pts[i]);
    }
    std::uint64_t inside = 0;
    for (std::uint64_t i = 0; i < ipow(p, n); ++i) {
      auto x = FpVector::from_index(p, n, i);
      if (h.contains(x)) {
        ++inside;
        continue;
      }
      auto f = separating_functional(h, x);
      EXPECT_EQ(f(x), 1u);
      for (const auto& y : pts) EXPECT_EQ(f(y), 0u);
    }
    EXPECT_EQ(inside, h.size());
    auto g = random_subspace(rng, p, n);
    auto both = intersect(h, g);
    for (const auto& y : pts) EXPECT_EQ(g.contains(y), both.has_value() && both->contains(y));
  }
}

TEST(Pigeonhole, TieBreakExample) {
  // H_1 = {x1 = 0}, H_2 = {x1 = 1} on F_2^2: both nonempty patterns have two points
  auto h1 = *AffineSubspace::from_equations({FpVector(2, {1, 0})}, {0}, 2, 2);
  auto h2 = *AffineSubspace::from_equations({FpVector(2, {1, 0})}, {1}, 2, 2);
  auto res = pigeonhole_subspace({h1, h2}, false);
  EXPECT_EQ(res.pattern, (std::vector<bool>{false, true}));
  EXPECT_EQ(res.members, (std::vector<unsigned>{1}));
  EXPECT_EQ(res.pattern_count, 2u);
  EXPECT_EQ(res.witness, FpVector(2, {1, 0}));
  EXPECT_TRUE(res.subspace.contains(res.witness));
  EXPECT_THROW(pigeonhole_subspace({h1, h2}, true), std::invalid_argument);
}

TEST(Pigeonhole, GuaranteeOnRandomInstances) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    std::uint32_t p = it % 2 ? 3 : 2;
    unsigned n = 2 + rng() % 4;
    unsigned r = 1 + rng() % (n / 2);
    std::vector<AffineSubspace> hs;
    for (unsigned i = 0; i < r; ++i) hs.push_back(random_subspace(rng, p, n));
    auto res = pigeonhole_subspace(hs);
    EXPECT_GE(static_cast<int>(res.subspace.dim()), static_cast<int>(n) - 2 * static_cast<int>(r));
    for (const auto& u : res.subspace.points())
      for (unsigned i = 0; i < r; ++i) EXPECT_EQ(hs[i].contains(u), static_cast<bool>(res.pattern[i]));
  }
}
