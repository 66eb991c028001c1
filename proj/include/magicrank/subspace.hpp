#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magicrank/ff.hpp"

namespace magicrank {

/// Affine map y -> M y + t from F_p^m to F_p^n. Columns of M are stored as vectors.
class AffineMap {
 public:
  AffineMap(std::uint32_t p, unsigned domain_dim, unsigned codomain_dim, std::vector<FpVector> columns,
            FpVector translation);
  static AffineMap identity(std::uint32_t p, unsigned n);

  std::uint32_t p() const { return p_; }
  unsigned domain_dim() const { return m_; }
  unsigned codomain_dim() const { return n_; }
  const std::vector<FpVector>& columns() const { return cols_; }
  const FpVector& translation() const { return t_; }

  FpVector operator()(const FpVector& y) const;

 private:
  std::uint32_t p_;
  unsigned m_, n_;
  std::vector<FpVector> cols_;
  FpVector t_;
};

/// Affine functional x -> <a, x> + b.
struct AffineFunctional {
  FpVector a;
  std::uint32_t b = 0;
  std::uint32_t operator()(const FpVector& x) const { return (a.dot(x) + b) % a.p(); }
};

/// Nonempty affine subspace H = v + L(H) of F_p^n in canonical form: the basis of
/// L(H) is in reduced row-echelon form and the offset is zero on every pivot
/// coordinate. Two subspaces are equal iff their canonical data are equal.
class AffineSubspace {
 public:
  /// Span of generators (any spanning set, possibly dependent) through point.
  AffineSubspace(const FpVector& point, const std::vector<FpVector>& generators);
  static AffineSubspace full(std::uint32_t p, unsigned n);
  static AffineSubspace single_point(const FpVector& v);
  /// Solution set of <rows[i], x> = rhs[i]; nullopt when inconsistent.
  static std::optional<AffineSubspace> from_equations(const std::vector<FpVector>& rows,
                                                      const std::vector<std::uint32_t>& rhs,
                                                      std::uint32_t p, unsigned n);

  std::uint32_t p() const { return offset_.p(); }
  unsigned n() const { return offset_.n(); }
  unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
  unsigned codim() const { return n() - dim(); }
  const std::vector<FpVector>& basis() const { return basis_; }
  const std::vector<unsigned>& pivots() const { return pivots_; }
  const FpVector& offset() const { return offset_; }

  bool contains(const FpVector& x) const;
  /// Local coordinates y of x in H, i.e. parametrize()(y) == x. Requires contains(x).
  FpVector coordinates(const FpVector& x) const;
  /// Equations <a_i, x> = b_i cutting out H, with the a_i a basis of L(H)^perp.
  std::pair<std::vector<FpVector>, std::vector<std::uint32_t>> equations() const;
  /// All points, in the order of their local coordinates.
  std::vector<FpVector> points() const;
  std::uint64_t size() const;

  bool operator==(const AffineSubspace&) const = default;

  /// "p n dim ; b_1 ; ... ; b_dim ; offset" with space-separated entries.
  std::string to_text() const;
  static AffineSubspace parse(const std::string& text);

 private:
  AffineSubspace() = default;
  void canonicalize(const FpVector& point, const std::vector<FpVector>& generators);

  std::vector<FpVector> basis_;
  std::vector<unsigned> pivots_;
  FpVector offset_;
};

/// Injective affine map F_p^dim(H) -> F_p^n whose image is exactly H.
AffineMap parametrize(const AffineSubspace& h);

bool membership(const AffineSubspace& h, const FpVector& x);

/// Intersection; nullopt stands for the empty set.
std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b);

/// The lexicographically first functional (by the linear part a, then rescaled)
/// that vanishes on H and equals 1 at x0. Throws if x0 lies in H.
AffineFunctional separating_functional(const AffineSubspace& h, const FpVector& x0);

struct PigeonholeResult {
  AffineSubspace subspace;        // U
  std::vector<unsigned> members;  // S, 0-based indices with U inside H_i
  std::vector<bool> pattern;      // alpha
  std::uint64_t pattern_count;    // |E^-1(alpha)|
  FpVector witness;               // x0
  std::vector<AffineFunctional> separators;  // h_i for i not in S, in index order
};

/// Constructive pigeonhole over indicator patterns: U has dimension at least
/// n - 2r and the pattern (1_{H_i}(x))_i equals 1_S on all of U. The pattern
/// alpha maximizes |E^-1(alpha)| (ties: lexicographically smallest alpha), x0 is
/// the lexicographically first point with that pattern. With
/// enforce_bound the r <= n/2 precondition is checked; otherwise the
/// construction runs for any r and only the dimension guarantee lapses.
PigeonholeResult pigeonhole_subspace(const std::vector<AffineSubspace>& hs, bool enforce_bound = true);

}  // namespace magicrank
