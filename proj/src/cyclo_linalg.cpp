#include "magicrank/cyclo_linalg.hpp"

#include <stdexcept>

namespace magicrank {

namespace {

using Row = std::vector<CycloNumber>;

// Fraction-free forward elimination on rows with `ncols` leading coefficient
// columns. Returns pivot columns; rows are left in echelon order.
std::vector<std::size_t> forward_eliminate(std::vector<Row>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const CycloNumber piv = rows[r][c];
    for (std::size_t o = r + 1; o < rows.size(); ++o) {
      if (rows[o][c].is_zero()) continue;
      const CycloNumber f = rows[o][c];
      for (std::size_t k = c; k < rows[o].size(); ++k) rows[o][k] = piv * rows[o][k] - f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<CycloNumber>> solve_in_span(const std::vector<std::vector<CycloNumber>>& columns,
                                                      const std::vector<CycloNumber>& target) {
  const std::size_t ncols = columns.size();
  const std::size_t nrows = target.size();
  const unsigned m = nrows ? target[0].m() : (ncols ? columns[0][0].m() : 1);
  for (const auto& col : columns)
    if (col.size() != nrows) throw std::invalid_argument("solve_in_span: column length mismatch");

  std::vector<Row> rows;
  rows.reserve(nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    Row row;
    row.reserve(ncols + 1);
    bool any = !target[i].is_zero();
    for (std::size_t j = 0; j < ncols; ++j) {
      row.push_back(columns[j][i]);
      any = any || !columns[j][i].is_zero();
    }
    row.push_back(target[i]);
    if (any) rows.push_back(std::move(row));
  }
  auto pivots = forward_eliminate(rows, ncols);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (!rows[r][ncols].is_zero()) return std::nullopt;

  std::vector<CycloNumber> x(ncols, CycloNumber::zero(m));
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const auto c = pivots[r];
    CycloNumber rhs = rows[r][ncols];
    for (std::size_t k = c + 1; k < ncols; ++k)
      if (!rows[r][k].is_zero() && !x[k].is_zero()) rhs -= rows[r][k] * x[k];
    x[c] = rhs * rows[r][c].inverse();
  }
  return x;
}

unsigned cyclo_rank(const std::vector<std::vector<CycloNumber>>& columns) {
  if (columns.empty()) return 0;
  const std::size_t nrows = columns[0].size();
  std::vector<Row> rows(nrows);
  for (std::size_t i = 0; i < nrows; ++i)
    for (const auto& col : columns) rows[i].push_back(col.at(i));
  return static_cast<unsigned>(forward_eliminate(rows, columns.size()).size());
}

}  // namespace magicrank
