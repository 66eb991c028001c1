#include <gtest/gtest.h>

#include <random>

#include "magicrank/kernels.hpp"
#include "magicrank/fourier.hpp"
#include "magicrank/polynomial.hpp"

using namespace magicrank;
namespace k = magicrank::kernels;

TEST(Kernels, PatternCountsAgree) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    std::uint32_t p = it % 2 ? 3 : 2;
    unsigned n = 2 + rng() % 4;
    std::vector<k::EquationSet> subs(1 + rng() % 3);
    for (auto& s : subs)
      for (unsigned e = 0, c = rng() % n; e < c; ++e) {
        std::vector<std::uint32_t> row(n);
        for (auto& v : row) v = rng() % p;
        s.rows.push_back(row);
        s.rhs.push_back(rng() % p);
      }
    auto a = k::serial::pattern_counts(p, n, subs);
    auto b = k::parallel::pattern_counts(p, n, subs);
    ASSERT_EQ(a.size(), b.size());
    std::uint64_t total = 0;
    for (const auto& [key, t] : a) {
      EXPECT_EQ(b.at(key).count, t.count);
      EXPECT_EQ(b.at(key).first_index, t.first_index);
      total += t.count;
    }
    EXPECT_EQ(total, ipow(p, n));
  }
}

TEST(Kernels, FourierTransformAgrees) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u})
    for (unsigned n = 1; n <= 3; ++n) {
      unsigned m = default_root_order(p);
      std::vector<CycloNumber> f;
      for (std::uint64_t i = 0; i < ipow(p, n); ++i) f.push_back(CycloNumber::root(m, rng() % m));
      auto a = k::serial::fourier_transform(f, p, n);
      auto b = k::parallel::fourier_transform(f, p, n);
      EXPECT_EQ(a, b);
    }
}

TEST(Kernels, CorrelationScanAgrees) {
  for (std::uint32_t p : {2u, 3u}) {
    unsigned n = 2, m = p * p * p;
    PolynomialFamily fam(p, n, 2);
    fam.prepare(m);
    auto target = phase_exponents(NonclassicalPoly::weight(p, n, 1).table(), m);
    k::CandidateSource src{fam.size(), [&](std::uint64_t i, std::vector<std::uint32_t>& e) { fam.exponents(i, m, e); }};
    EXPECT_EQ(k::serial::correlation_scan(target, p, n, m, src), k::parallel::correlation_scan(target, p, n, m, src));
  }
}

TEST(Kernels, MaxNonvanishingOrderAgrees) {
  for (unsigned lvl = 0; lvl < 3; ++lvl) {
    auto t = NonclassicalPoly::weight(2, 3, lvl).table();
    std::vector<std::uint64_t> nums;
    for (const auto& v : t.values()) nums.push_back(v.numerator_at(2));
    unsigned a = k::serial::max_nonvanishing_order(nums, 8, 2, 3, 4);
    EXPECT_EQ(a, k::parallel::max_nonvanishing_order(nums, 8, 2, 3, 4));
    EXPECT_EQ(a, lvl + 1);
  }
}

TEST(Kernels, SubsetSpanSearchAgrees) {
  unsigned m = 8;
  std::vector<k::Column> dict;
  for (unsigned j = 0; j < 6; ++j) {
    k::Column c;
    for (unsigned x = 0; x < 4; ++x) {
      bool on = ((j + x) % 3) != 0;
      c.entries.push_back(on ? CycloNumber::root(m, (j * x) % m) : CycloNumber::zero(m));
      c.support.push_back(on);
    }
    dict.push_back(c);
  }
  std::vector<CycloNumber> target;
  for (unsigned x = 0; x < 4; ++x) target.push_back(dict[2].entries[x] + dict[4].entries[x] * mpq_class(2));
  for (unsigned r = 1; r <= 3; ++r) {
    auto a = k::serial::subset_span_search(dict, target, r);
    auto b = k::parallel::subset_span_search(dict, target, r);
    EXPECT_EQ(a.hit.has_value(), b.hit.has_value()) << r;
    EXPECT_EQ(a.subsets_tested, b.subsets_tested);
    EXPECT_EQ(a.subsets_pruned, b.subsets_pruned);
    if (a.hit) {
      EXPECT_EQ(a.hit->indices, b.hit->indices);
      EXPECT_EQ(a.hit->coefficients, b.hit->coefficients);
    }
  }
  EXPECT_FALSE(k::serial::subset_span_search(dict, target, 1).hit.has_value());
  EXPECT_TRUE(k::serial::subset_span_search(dict, target, 2).hit.has_value());
}
