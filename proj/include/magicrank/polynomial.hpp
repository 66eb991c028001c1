#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "magicrank/ff.hpp"
#include "magicrank/subspace.hpp"
#include "magicrank/torus.hpp"

namespace magicrank {

/// |x_1|^i_1 ... |x_n|^i_n / p^(level+1), exponents in {0, ..., p-1}.
struct Monomial {
  std::vector<std::uint8_t> exponents;
  unsigned level = 0;

  unsigned total_degree() const;
  /// Ordered by (level, exponents) lexicographically.
  auto operator<=>(const Monomial& o) const {
    if (auto c = level <=> o.level; c != 0) return c;
    return exponents <=> o.exponents;
  }
  bool operator==(const Monomial&) const = default;
};

/// Values of a map F_p^n -> T at every point, in index order.
class FunctionTable {
 public:
  FunctionTable(std::uint32_t p, unsigned n, std::vector<TorusValue> values);
  static FunctionTable zeros(std::uint32_t p, unsigned n);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t size() const { return values_.size(); }
  const std::vector<TorusValue>& values() const { return values_; }
  const TorusValue& at(std::uint64_t index) const { return values_[index]; }
  const TorusValue& at(const FpVector& x) const;

  unsigned max_depth() const;
  bool is_zero() const;
  bool operator==(const FunctionTable&) const = default;

 private:
  std::uint32_t p_;
  unsigned n_;
  std::vector<TorusValue> values_;
};

/// Nonclassical polynomial F_p^n -> T in its unique global representation
///   alpha + sum c_{i,j} |x_1|^i_1 ... |x_n|^i_n / p^(j+1),
/// with c in {1, ..., p-1} (zero terms are never stored) and i != 0.
class NonclassicalPoly {
 public:
  NonclassicalPoly(std::uint32_t p, unsigned n, TorusValue shift = TorusValue(2),
                   std::map<Monomial, std::uint32_t> terms = {});

  /// |x| / p^(level+1) = sum_t |x_t| / p^(level+1).
  static NonclassicalPoly weight(std::uint32_t p, unsigned n, unsigned level);
  static NonclassicalPoly constant(std::uint32_t p, unsigned n, TorusValue shift);
  /// Classical polynomial iota(sum c_i x^i): every term at level 0.
  static NonclassicalPoly classical(std::uint32_t p, unsigned n,
                                    const std::map<std::vector<std::uint8_t>, std::uint32_t>& coeffs,
                                    std::uint32_t constant_term = 0);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }
  const TorusValue& shift() const { return shift_; }
  const std::map<Monomial, std::uint32_t>& terms() const { return terms_; }

  TorusValue evaluate(const FpVector& x) const;
  FunctionTable table() const;

  /// max over terms of |i| + j(p-1); 0 for constants.
  unsigned representation_degree() const;
  /// Largest stored level j; 0 when there are no terms.
  unsigned depth() const;
  bool is_classical() const { return depth() == 0; }
  /// Largest torus depth any value can have.
  unsigned value_depth() const;

  NonclassicalPoly operator+(const NonclassicalPoly& o) const;
  NonclassicalPoly operator-() const;
  NonclassicalPoly operator-(const NonclassicalPoly& o) const { return *this + (-o); }
  bool operator==(const NonclassicalPoly&) const = default;

  /// "p n shift_num shift_depth ; i_1 .. i_n | j | c ; ..." in term order.
  std::string to_text() const;
  static NonclassicalPoly parse(const std::string& text);

 private:
  std::uint32_t p_;
  unsigned n_;
  TorusValue shift_;
  std::map<Monomial, std::uint32_t> terms_;
};

/// Delta_h P(x) = P(x + h) - P(x), pointwise.
FunctionTable additive_derivative(const FunctionTable& t, const FpVector& h);
FunctionTable additive_derivative(const NonclassicalPoly& poly, const FpVector& h);

/// Evaluation cap for the exhaustive derivative scan: p^(n(d+2)) <= 2^24.
inline constexpr std::uint64_t kDegreeScanBudget = std::uint64_t{1} << 24;

/// Smallest d such that every (d+1)-fold additive derivative vanishes,
/// established by an exhaustive scan over direction tuples.
unsigned degree(const FunctionTable& t);
/// Derivative-scan degree, cross-checked against representation_degree().
unsigned degree(const NonclassicalPoly& poly);
unsigned depth(const NonclassicalPoly& poly);
bool is_classical(const NonclassicalPoly& poly);

/// Unique global representation of a table. With a budget, throws
/// std::invalid_argument if the table's degree exceeds it.
NonclassicalPoly interpolate(const FunctionTable& t, std::optional<unsigned> max_degree = std::nullopt);

/// y -> P(A(y)) on F_p^m.
FunctionTable restrict(const FunctionTable& t, const AffineMap& a);
FunctionTable restrict(const NonclassicalPoly& poly, const AffineMap& a);

/// Every polynomial of degree <= max_degree with zero shift, indexed by base-p
/// digits of its coefficients over a fixed monomial list.
class PolynomialFamily {
 public:
  PolynomialFamily(std::uint32_t p, unsigned n, unsigned max_degree);
  /// Same, but with the level capped (max_level = 0 gives classical polynomials).
  PolynomialFamily(std::uint32_t p, unsigned n, unsigned max_degree, unsigned max_level);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  /// p^(number of monomials); throws BudgetExceeded past 2^62.
  std::uint64_t size() const;

  NonclassicalPoly member(std::uint64_t index) const;
  /// Values of member(index) in units of 1/m (m divisible by the largest denominator).
  void exponents(std::uint64_t index, unsigned m, std::vector<std::uint32_t>& out) const;
  /// Precomputes per-monomial value tables for exponents().
  void prepare(unsigned m);

 private:
  std::uint32_t p_;
  unsigned n_;
  std::vector<Monomial> monos_;
  unsigned prepared_m_ = 0;
  std::vector<std::vector<std::uint32_t>> mono_exps_;  // per monomial, per point
};

}  // namespace magicrank

namespace magicrank {

/// Single-variable cubic a x^3 + b x^2 + c x over F_p, used for p > 3.
struct Cubic {
  std::uint32_t a = 1, b = 0, c = 0;
};

/// Phase polynomial of the n-fold magic state: |x|/8 for p = 2, |x|/9 for
/// p = 3, and the classical sum_t P(x_t) for p > 3 (P must be a genuine cubic).
NonclassicalPoly magic_polynomial(std::uint32_t p, unsigned n, const Cubic& cubic = {});

}  // namespace magicrank
