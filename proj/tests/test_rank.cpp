#include <gtest/gtest.h>

#include "magicrank/certificate.hpp"
#include "magicrank/rank.hpp"

using namespace magicrank;

namespace {

NonclassicalPoly classical(std::uint32_t p, unsigned n, std::map<std::vector<std::uint8_t>, std::uint32_t> c) {
  return NonclassicalPoly::classical(p, n, c);
}

}  // namespace

TEST(Rank2, SmallExamples) {
  EXPECT_EQ(exact_rank2(NonclassicalPoly(2, 3)).rank, 0u);
  EXPECT_EQ(exact_rank2(classical(2, 3, {{{1, 0, 0}, 1}})).rank, 1u);
  EXPECT_EQ(exact_rank2(classical(2, 3, {{{1, 1, 0}, 1}})).rank, 2u);
  EXPECT_EQ(exact_rank2(NonclassicalPoly::weight(2, 2, 1)).rank, 2u);
  auto bent = classical(2, 4, {{{1, 1, 0, 0}, 1}, {{0, 0, 1, 1}, 1}});
  auto r = exact_rank2(bent);
  EXPECT_EQ(r.rank, 4u);
  EXPECT_EQ(r.functionals.size(), 4u);
}

TEST(Rank2, FactorisationReproducesTarget) {
  auto P = classical(3, 3, {{{1, 0, 1}, 2}, {{2, 0, 0}, 1}});
  auto r = exact_rank2(P);
  for (std::uint64_t i = 0; i < ipow(3, 3); ++i) {
    auto x = FpVector::from_index(3, 3, i);
    std::uint64_t key = 0;
    for (const auto& f : r.functionals) key = key * 3 + f.dot(x);
    ASSERT_TRUE(r.gamma[key].has_value());
    EXPECT_EQ(*r.gamma[key], P.evaluate(x));
  }
  EXPECT_EQ(r.rank, 2u);
}

TEST(Correlation, ExponentAndThreshold) {
  EXPECT_EQ(correlation_exponent(2, 3), 3u);
  EXPECT_EQ(correlation_exponent(3, 3), 2u);
  EXPECT_EQ(correlation_exponent(5, 3), 2u);
  EXPECT_EQ(correlation_threshold_sq(2, 3, 1), mpq_class(1, 64));
  EXPECT_EQ(correlation_threshold_sq(3, 3, 2), mpq_class(1, 6561));
  EXPECT_EQ(rank_lower_bound_from_correlation(2, 3, CycloNumber::one(8)), 0u);
  EXPECT_EQ(rank_lower_bound_from_correlation(2, 3, CycloNumber::rational(8, mpq_class(1, 100))), 2u);
  EXPECT_EQ(rank_lower_bound_from_correlation(2, 3, CycloNumber::rational(8, mpq_class(1, 64))), 1u);
}

TEST(Correlation, MagicBoundIsNotProvenAtSmallSizes) {
  auto b = rank_lb_by_correlation(magic_polynomial(2, 2), 3, 1);
  EXPECT_FALSE(b.proven);
  auto cert = make_certificate(magic_polynomial(2, 2), b);
  EXPECT_TRUE(verify_certificate(cert).ok);
  cert["proven"] = true;
  EXPECT_FALSE(verify_certificate(cert).ok);
}

TEST(Frank, MatchesFourierSparsityAtDegreeTwo) {
  for (std::uint64_t i = 0; i < 16; ++i) {
    auto P = PolynomialFamily(2, 2, 2).member(i * 7);
    auto f = PhaseTable::of(P, 8);
    auto r = frank_exact(f, 2, 4);
    ASSERT_TRUE(r.rank.has_value());
    EXPECT_EQ(*r.rank, fourier_sparsity(f));
  }
  auto f = PhaseTable::of(classical(2, 2, {{{1, 1}, 1}}), 8);
  EXPECT_EQ(*frank_exact(f, 2, 4).rank, 4u);
  EXPECT_FALSE(frank_exact(f, 2, 3).rank.has_value());
}

TEST(Frank, CertificateRoundTripAndTamper) {
  auto f = PhaseTable::of(NonclassicalPoly::weight(2, 2, 1), 8);
  auto r = frank_exact(f, 2, 4);
  auto cert = make_certificate(f, 2, r);
  EXPECT_TRUE(verify_certificate(cert).ok) << verify_certificate(cert).detail;
  auto bad = cert;
  bad["coefficients"][0] = CycloNumber::rational(8, 3).to_string();
  EXPECT_FALSE(verify_certificate(bad).ok);
  auto low = cert;
  low["rank"] = *r.rank - 1;
  EXPECT_FALSE(verify_certificate(low).ok);
}

TEST(StabRank, SmallMagicStates) {
  auto c21 = enumerate_stabilizers(2, 1);
  auto r = stab_rank_exact(magic_state(2, 1), c21, 3);
  EXPECT_EQ(r.chi, 2u);
  EXPECT_EQ(r.tested_per_r.at(0) + r.pruned_per_r.at(0), 6u);
  EXPECT_EQ(stab_rank_exact(plus_state(2, 1), c21, 2).chi, 1u);
  auto c22 = enumerate_stabilizers(2, 2);
  EXPECT_EQ(stab_rank_exact(magic_state(2, 2), c22, 2).chi, 2u);
  // no pair of single-qutrit stabilizer states spans the qutrit magic state
  auto c31 = enumerate_stabilizers(3, 1);
  auto r3 = stab_rank_exact(magic_state(3, 1), c31, 3);
  EXPECT_EQ(r3.chi, 3u);
  EXPECT_EQ(r3.tested_per_r.at(1) + r3.pruned_per_r.at(1), 66u);
}

TEST(StabRank, CertificateRoundTripAndTamper) {
  auto v = magic_state(2, 1);
  auto r = stab_rank_exact(v, enumerate_stabilizers(2, 1), 2);
  auto cert = make_certificate(v, r);
  EXPECT_TRUE(verify_certificate(cert).ok) << verify_certificate(cert).detail;
  auto bad = cert;
  bad["coefficients"][1] = CycloNumber::rational(8, 5).to_string();
  EXPECT_FALSE(verify_certificate(bad).ok);
  auto kind = cert;
  kind["kind"] = "mystery";
  EXPECT_FALSE(verify_certificate(kind).ok);
}

TEST(Rank2, CertificateRoundTripAndTamper) {
  auto P = classical(2, 3, {{{1, 1, 0}, 1}});
  auto cert = make_certificate(P, exact_rank2(P));
  EXPECT_TRUE(verify_certificate(cert).ok) << verify_certificate(cert).detail;
  auto low = cert;
  low["rank"] = 1;
  EXPECT_FALSE(verify_certificate(low).ok);
}

TEST(Restriction, RankDropIsBounded) {
  auto bent = classical(2, 4, {{{1, 1, 0, 0}, 1}, {{0, 0, 1, 1}, 1}});
  auto U = *AffineSubspace::from_equations({FpVector(2, {0, 0, 0, 1})}, {0}, 2, 4);
  auto rep = restriction_rank_check(bent, U);
  EXPECT_EQ(rep.rank, 4u);
  EXPECT_EQ(rep.codim, 1u);
  EXPECT_EQ(rep.rank_restricted, 2u);
  EXPECT_TRUE(rep.hypothesis);
  ASSERT_TRUE(rep.holds.has_value());
  EXPECT_TRUE(*rep.holds);
}
