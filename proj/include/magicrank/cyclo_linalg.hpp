#pragma once

#include <optional>
#include <vector>

#include "magicrank/cyclo.hpp"

namespace magicrank {

/// Coefficients c with sum_j c_j columns[j] == target exactly, or nullopt when
/// target is outside the span. Free variables are set to zero. Forward
/// elimination is fraction-free; only back substitution divides.
std::optional<std::vector<CycloNumber>> solve_in_span(const std::vector<std::vector<CycloNumber>>& columns,
                                                      const std::vector<CycloNumber>& target);

/// Rank of the matrix whose columns are given.
unsigned cyclo_rank(const std::vector<std::vector<CycloNumber>>& columns);

}  // namespace magicrank
