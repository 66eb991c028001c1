#include <gtest/gtest.h>

#include "magicrank/pipeline.hpp"
#include "magicrank/rank.hpp"

using namespace magicrank;

namespace {

std::vector<DecompositionTerm> witness(std::uint32_t p, unsigned n) {
  auto cat = enumerate_stabilizers(p, n);
  auto r = stab_rank_exact(magic_state(p, n), cat, 3);
  std::vector<DecompositionTerm> out;
  for (std::size_t i = 0; i < r.states.size(); ++i) out.push_back({r.coefficients[i], r.states[i]});
  return out;
}

}  // namespace

TEST(Decomposition, AcceptsWitnessAndNamesBadPoint) {
  auto terms = witness(2, 2);
  EXPECT_NO_THROW(check_decomposition(magic_state(2, 2), terms));
  terms[0].coefficient = terms[0].coefficient + CycloNumber::one(8);
  try {
    check_decomposition(magic_state(2, 2), terms);
    FAIL() << "tampered decomposition accepted";
  } catch (const DecompositionError& e) {
    EXPECT_EQ(e.point().n(), 2u);
  }
}

TEST(Pipeline, SmallWitnesses) {
  for (unsigned n = 1; n <= 2; ++n) {
    auto terms = witness(2, n);
    auto rep = theorem1_pipeline(2, n, terms);
    EXPECT_EQ(rep.r, terms.size());
    EXPECT_FALSE(rep.claim_hypothesis);
    EXPECT_TRUE(rep.restricted_identity);
    EXPECT_TRUE(rep.chain_consistent);
    EXPECT_EQ(rep.exponent, 3u);
    EXPECT_LE(rep.rank_lower_bound, rep.claim.members.size());
    EXPECT_EQ(rep.restricted.n(), rep.claim.subspace.dim());
  }
}

TEST(Pipeline, RejectsBrokenDecomposition) {
  auto terms = witness(2, 1);
  terms.pop_back();
  EXPECT_THROW(theorem1_pipeline(2, 1, terms), DecompositionError);
}

TEST(Pipeline, ArbitraryTargetWithinBound) {
  // e(x1 x2 / 2) on F_2^4 written as four stabilizer terms is trivially its own
  // single term; the restricted identity must still hold
  auto P = NonclassicalPoly::classical(2, 4, {{{1, 1, 0, 0}, 1}});
  StabilizerState s(AffineSubspace::full(2, 4), P);
  auto rep = theorem1_pipeline(P, {{CycloNumber::one(8), s}});
  EXPECT_TRUE(rep.claim_hypothesis);
  EXPECT_TRUE(rep.dim_guarantee_met);
  EXPECT_TRUE(rep.restricted_identity);
  EXPECT_TRUE(rep.chain_consistent);
}

TEST(Claim, RandomInstances) {
  auto c = claim_random_check(100, 42);
  EXPECT_EQ(c.instances, 100u);
  EXPECT_EQ(c.passed, 100u);
  EXPECT_TRUE(c.failures.empty());
}
