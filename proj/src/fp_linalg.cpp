#include "magicrank/fp_linalg.hpp"

#include <stdexcept>

namespace magicrank {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return FpScalar(p, a).inverse().value(); }

// Row operations on plain digit vectors, so the augmented column can ride along.
struct Work {
  std::uint32_t p;
  std::vector<std::vector<std::uint32_t>> rows;
};

std::vector<unsigned> eliminate(Work& w, unsigned ncols) {
  const auto p = w.p;
  std::vector<unsigned> pivots;
  std::size_t r = 0;
  for (unsigned c = 0; c < ncols && r < w.rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < w.rows.size() && w.rows[sel][c] == 0) ++sel;
    if (sel == w.rows.size()) continue;
    std::swap(w.rows[r], w.rows[sel]);
    auto inv = inv_mod(w.rows[r][c], p);
    for (auto& e : w.rows[r]) e = static_cast<std::uint32_t>(std::uint64_t{e} * inv % p);
    for (std::size_t o = 0; o < w.rows.size(); ++o) {
      if (o == r || w.rows[o][c] == 0) continue;
      auto f = w.rows[o][c];
      for (std::size_t k = 0; k < w.rows[o].size(); ++k)
        w.rows[o][k] = static_cast<std::uint32_t>((w.rows[o][k] + std::uint64_t{p - f} * w.rows[r][k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  w.rows.resize(r);
  return pivots;
}

}  // namespace

Echelon rref(std::vector<FpVector> rows, std::uint32_t p, unsigned ncols) {
  Work w{p, {}};
  for (const auto& v : rows) {
    if (v.p() != p || v.n() != ncols) throw std::invalid_argument("rref: row shape mismatch");
    w.rows.emplace_back(v.entries().begin(), v.entries().end());
  }
  auto piv = eliminate(w, ncols);
  Echelon e;
  e.pivots = piv;
  for (auto& r : w.rows) e.rows.emplace_back(p, std::move(r));
  return e;
}

std::vector<FpVector> nullspace(const std::vector<FpVector>& rows, std::uint32_t p, unsigned ncols) {
  auto e = rref(rows, p, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (unsigned f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    auto v = FpVector::zero(p, ncols);
    v.set(f, 1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v.set(e.pivots[r], (p - e.rows[r][f]) % p);
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis), p, ncols).rows;
}

std::optional<FpVector> solve_particular(const std::vector<FpVector>& rows,
                                         const std::vector<std::uint32_t>& rhs, std::uint32_t p,
                                         unsigned ncols) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("solve: rhs length mismatch");
  Work w{p, {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].p() != p || rows[i].n() != ncols) throw std::invalid_argument("solve: row shape mismatch");
    std::vector<std::uint32_t> r(rows[i].entries().begin(), rows[i].entries().end());
    r.push_back(rhs[i] % p);
    w.rows.push_back(std::move(r));
  }
  auto piv = eliminate(w, ncols + 1);
  auto x = FpVector::zero(p, ncols);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == ncols) return std::nullopt;
    x.set(piv[r], w.rows[r][ncols]);
  }
  return x;
}

}  // namespace magicrank
