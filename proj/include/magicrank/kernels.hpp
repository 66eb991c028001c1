#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel with identical,
// deterministic results; library code calls the parallel versions and tests
// check the two against each other.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "magicrank/cyclo.hpp"
#include "magicrank/ff.hpp"

namespace magicrank::kernels {

/// Affine subspace given by equations <rows[i], x> = rhs[i], with x packed as digits.
struct EquationSet {
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::uint32_t> rhs;
};

struct PatternTally {
  std::uint64_t count = 0;
  std::uint64_t first_index = 0;  // lexicographically first point with the pattern
};

/// Bit (r-1-i) of a key is 1_{H_i}(x), so integer order on keys is
/// lexicographic order on patterns.
using PatternCounts = std::map<std::uint64_t, PatternTally>;

/// Candidate generator for correlation scans: fills the exponent table
/// (values mod m, one per point) of candidate number `index`.
struct CandidateSource {
  std::uint64_t count;
  std::function<void(std::uint64_t index, std::vector<std::uint32_t>& exponents)> fill;
};

/// For each distinct value of p^(2n) |<e(P), e(Q)>|^2 (as reduced integer
/// coefficients in Q(zeta_m)), the smallest candidate index attaining it.
using CorrelationValues = std::map<std::vector<std::int64_t>, std::uint64_t>;

struct SpanHit {
  std::vector<std::size_t> indices;
  std::vector<CycloNumber> coefficients;
};

struct SubsetSearchResult {
  std::optional<SpanHit> hit;  // lexicographically first spanning subset
  std::uint64_t subsets_tested = 0;
  std::uint64_t subsets_pruned = 0;
};

/// A dictionary column for subset searches: dense entries plus a support mask.
struct Column {
  std::vector<CycloNumber> entries;
  std::vector<bool> support;
};

namespace serial {

PatternCounts pattern_counts(std::uint32_t p, unsigned n, const std::vector<EquationSet>& subspaces);

/// Naive O(p^2n) transform: out(alpha) = p^-n sum_x f(x) omega_p^<alpha, x>.
std::vector<CycloNumber> fourier_transform(std::span<const CycloNumber> f, std::uint32_t p, unsigned n);

CorrelationValues correlation_scan(std::span<const std::uint32_t> target, std::uint32_t p, unsigned n,
                                   unsigned m, const CandidateSource& candidates);

/// Highest k <= max_order such that some k-fold additive derivative of the
/// table (numerators mod modulus) is not identically zero.
unsigned max_nonvanishing_order(std::span<const std::uint64_t> numerators, std::uint64_t modulus,
                                std::uint32_t p, unsigned n, unsigned max_order);

/// Lexicographically first r-subset of the dictionary whose span contains target.
/// Subsets whose joint support misses a support point of target are skipped.
SubsetSearchResult subset_span_search(const std::vector<Column>& dictionary,
                                      const std::vector<CycloNumber>& target, unsigned r);

}  // namespace serial

namespace parallel {

PatternCounts pattern_counts(std::uint32_t p, unsigned n, const std::vector<EquationSet>& subspaces);
std::vector<CycloNumber> fourier_transform(std::span<const CycloNumber> f, std::uint32_t p, unsigned n);
CorrelationValues correlation_scan(std::span<const std::uint32_t> target, std::uint32_t p, unsigned n,
                                   unsigned m, const CandidateSource& candidates);
unsigned max_nonvanishing_order(std::span<const std::uint64_t> numerators, std::uint64_t modulus,
                                std::uint32_t p, unsigned n, unsigned max_order);
SubsetSearchResult subset_span_search(const std::vector<Column>& dictionary,
                                      const std::vector<CycloNumber>& target, unsigned r);

}  // namespace parallel

/// Sets the OpenMP worker cap; 0 restores the default.
void set_max_threads(unsigned threads);

}  // namespace magicrank::kernels
