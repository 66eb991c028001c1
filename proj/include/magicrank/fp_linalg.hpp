#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "magicrank/ff.hpp"

namespace magicrank {

/// Reduced row-echelon form over F_p; zero rows are dropped.
struct Echelon {
  std::vector<FpVector> rows;
  std::vector<unsigned> pivots;  // pivot column of each row
};

/// All rows must share p and length (ncols).
Echelon rref(std::vector<FpVector> rows, std::uint32_t p, unsigned ncols);

/// Basis of {x : <row, x> = 0 for every row}, in RREF.
std::vector<FpVector> nullspace(const std::vector<FpVector>& rows, std::uint32_t p, unsigned ncols);

/// One solution of <rows[i], x> = rhs[i] for all i, or nullopt if inconsistent.
/// The returned solution has zeros in all free coordinates.
std::optional<FpVector> solve_particular(const std::vector<FpVector>& rows,
                                         const std::vector<std::uint32_t>& rhs, std::uint32_t p,
                                         unsigned ncols);

}  // namespace magicrank
