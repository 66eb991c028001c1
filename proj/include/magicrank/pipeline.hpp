#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "magicrank/fourier.hpp"
#include "magicrank/stabilizer.hpp"
#include "magicrank/subspace.hpp"

namespace magicrank {

struct DecompositionTerm {
  CycloNumber coefficient;  // relative to the unnormalized amplitude column
  StabilizerState state;
};

/// A decomposition that does not reproduce its target; names the first bad point.
class DecompositionError : public std::invalid_argument {
 public:
  DecompositionError(const std::string& what, FpVector point)
      : std::invalid_argument(what), point_(std::move(point)) {}
  const FpVector& point() const { return point_; }

 private:
  FpVector point_;
};

/// Throws DecompositionError unless sum_i c_i amplitudes(state_i) == target entrywise
/// (both unnormalized).
void check_decomposition(const StateVector& target, const std::vector<DecompositionTerm>& terms);

struct PipelineReport {
  std::uint32_t p = 0;
  unsigned n = 0;
  unsigned r = 0;                // number of terms
  bool claim_hypothesis = false; // r <= n/2
  PigeonholeResult claim;
  int guaranteed_dim = 0;        // n - 2r
  bool dim_guarantee_met = false;
  NonclassicalPoly restricted;   // P' on F_p^dim(U), shift included
  bool restricted_identity = false;
  ScanResult scan;               // best degree-<=2 correlation with P'
  unsigned exponent = 0;         // 1 + ceil(2/(p-1))
  mpq_class threshold_sq;        // p^(-2 exponent |S|)
  unsigned rank_lower_bound = 0; // certified from scan
  bool chain_consistent = false; // |S| >= frank_3(e(P')) >= rank_3(P') >= rank_lower_bound
};

/// Restricts a magic-state decomposition to the pigeonhole subspace of the
/// supports and checks the resulting inequality chain. Runs even when r > n/2;
/// the dimension guarantee is then reported as vacuous.
PipelineReport theorem1_pipeline(std::uint32_t p, unsigned n, const std::vector<DecompositionTerm>& terms,
                                 const Cubic& cubic = {}, unsigned prec = kDefaultPrecisionBits);
/// Same for an arbitrary full-support phase target e(P).
PipelineReport theorem1_pipeline(const NonclassicalPoly& P, const std::vector<DecompositionTerm>& terms,
                                 unsigned prec = kDefaultPrecisionBits);

struct ClaimCheck {
  std::uint64_t instances = 0;
  std::uint64_t passed = 0;
  std::vector<std::string> failures;
};

/// Random pigeonhole instances, p in {2, 3}, n <= max_n, 1 <= r <= n/2; each
/// checks dim(U) >= n - 2r and the membership pattern over all of U.
ClaimCheck claim_random_check(std::uint64_t instances, std::uint64_t seed, unsigned max_n = 8);

}  // namespace magicrank
