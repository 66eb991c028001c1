#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "magicrank/fourier.hpp"
#include "magicrank/stabilizer.hpp"

namespace magicrank {

/// Exact rank_2: P factors through r linear functionals. gamma is indexed by
/// the functional values packed base p, first functional most significant;
/// unreached keys are empty.
struct Rank2Result {
  unsigned rank = 0;
  std::vector<FpVector> functionals;
  std::vector<std::optional<TorusValue>> gamma;
  std::uint64_t subsets_tested = 0;
};

/// Cap on sum_r C(N, r) * p^n for the level-set search.
inline constexpr std::uint64_t kRank2Budget = std::uint64_t{1} << 28;

Rank2Result exact_rank2(const NonclassicalPoly& P);

/// 1 + ceil((d-1)/(p-1)).
unsigned correlation_exponent(std::uint32_t p, unsigned d);
/// p^(-2 * correlation_exponent(p, d) * r): the squared correlation that rank <= r forces.
mpq_class correlation_threshold_sq(std::uint32_t p, unsigned d, unsigned r);

struct CorrelationBound {
  unsigned d = 0;
  unsigned r = 0;
  mpq_class threshold_sq;
  ScanResult scan;
  bool proven = false;  // rank_d(P) > r
};

CorrelationBound rank_lb_by_correlation(const NonclassicalPoly& P, unsigned d, unsigned r,
                                        unsigned prec = kDefaultPrecisionBits);

/// Largest lower bound on rank_d provable from a given maximal squared correlation.
unsigned rank_lower_bound_from_correlation(std::uint32_t p, unsigned d, const CycloNumber& max_corr_sq,
                                           unsigned prec = kDefaultPrecisionBits);

struct FrankResult {
  std::optional<unsigned> rank;  // empty when r_max is exhausted
  std::vector<NonclassicalPoly> components;
  std::vector<CycloNumber> coefficients;
  std::vector<std::uint64_t> tested_per_r;  // entry k is r = k + 1
  std::uint64_t dictionary_size = 0;
};

/// Cap on sum_{r <= r_max} C(N, r) for dictionary subset searches.
inline constexpr std::uint64_t kSubsetBudget = std::uint64_t{1} << 30;

/// Smallest r <= r_max with f in the span of r phases e(Q), deg Q <= d - 1.
FrankResult frank_exact(const PhaseTable& f, unsigned d, unsigned r_max);

/// Number of nonzero Fourier coefficients.
unsigned fourier_sparsity(const PhaseTable& f);

struct StabRankResult {
  std::optional<unsigned> chi;  // empty when r_max is exhausted
  std::vector<std::size_t> indices;
  std::vector<StabilizerState> states;
  std::vector<CycloNumber> coefficients;  // relative to the unnormalized catalog columns
  std::vector<std::uint64_t> tested_per_r;
  std::vector<std::uint64_t> pruned_per_r;
};

StabRankResult stab_rank_exact(const StateVector& v, const StabilizerCatalog& catalog, unsigned r_max);

struct RestrictionReport {
  unsigned rank = 0;
  unsigned codim = 0;
  unsigned rank_restricted = 0;
  unsigned degree_restricted = 0;
  bool hypothesis = false;     // rank > p * codim + 1
  std::optional<bool> holds;  // degree stays 2 and rank' >= rank - p * codim
};

RestrictionReport restriction_rank_check(const NonclassicalPoly& P, const AffineSubspace& U);

}  // namespace magicrank
