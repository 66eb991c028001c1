#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "magicrank/polynomial.hpp"

namespace magicrank {

/// prod_t |1 + x_t| / 2 over F_2: 1/2 at the origin, 0 elsewhere.
NonclassicalPoly nor_poly(unsigned n);
/// |x_1 ... x_n| / 2: 1/2 at the all-ones point, 0 elsewhere.
NonclassicalPoly and_poly(unsigned n);

struct ChevalleyWarningReport {
  std::uint32_t p = 0;
  unsigned n = 0;
  std::uint64_t root_count = 0;
  unsigned degree_sum = 0;
  bool degree_condition = false;  // degree_sum < n
  bool divisible = false;         // root_count = 0 mod p
  bool vanish_at_origin = false;
  std::optional<FpVector> second_root;  // first nonzero common root (lexicographic)
  /// Divisibility holds whenever the degree condition does, and then a second
  /// root exists if all polynomials vanish at the origin.
  bool consistent() const {
    return !degree_condition || (divisible && (!vanish_at_origin || second_root.has_value()));
  }
};

/// Exhaustive common-root count for classical polynomials on the same F_p^n.
ChevalleyWarningReport chevalley_warning_check(const std::vector<NonclassicalPoly>& qs);

struct NorTheoremReport {
  unsigned n = 0, d = 0, r = 0;
  bool hypothesis = false;  // r (d - 1) < n
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::uint64_t family_size = 0;  // classical polynomials of degree <= d-1 vanishing at 0
  std::uint64_t tuples_checked = 0;
  std::uint64_t tuples_with_second_root = 0;
  std::optional<std::vector<NonclassicalPoly>> counterexample;
  bool nor_separates = false;  // NOR is 1/2 exactly at the origin
  bool holds() const { return nor_separates && tuples_with_second_root == tuples_checked; }
};

/// Tuple budget for the exhaustive mode; beyond it `samples` random tuples are drawn.
inline constexpr std::uint64_t kNorTupleBudget = std::uint64_t{1} << 20;

/// For r-tuples of classical degree-(d-1) polynomials vanishing at 0 on F_2^n,
/// exhibits a second common root, so NOR cannot factor through the tuple.
NorTheoremReport nor_rank_theorem_check(unsigned n, unsigned d, unsigned r, std::uint64_t seed = 0,
                                        std::uint64_t samples = 10000);

struct ChevalleySuite {
  std::uint64_t tuples = 0;
  std::uint64_t consistent = 0;
  std::vector<std::string> failures;
};

/// Random tuples over p in {2, 3}, n <= max_n, with degree sum below n and
/// random constant terms.
ChevalleySuite chevalley_random_check(std::uint64_t tuples, std::uint64_t seed, unsigned max_n = 5);

}  // namespace magicrank
