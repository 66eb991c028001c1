#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace magicrank {

/// Shared, immutable data for Q(zeta_m): the cyclotomic polynomial and the
/// reductions of x^k modulo it.
struct CycloContext {
  unsigned m;
  unsigned phi;
  std::vector<std::int64_t> cyclotomic;            // Phi_m, low degree first, monic
  std::vector<std::vector<std::int64_t>> power;    // x^k mod Phi_m for k < 2m
  std::vector<unsigned> units;                     // (Z/m)^*

  static std::shared_ptr<const CycloContext> get(unsigned m);
};

/// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
std::vector<std::int64_t> cyclotomic_polynomial(unsigned m);

/// Exact element of Q(zeta_m), zeta_m = e^(2 pi i / m), stored as its residue
/// modulo Phi_m in the power basis 1, zeta, ..., zeta^(phi(m)-1).
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(1) {}
  explicit CycloNumber(unsigned m);

  static CycloNumber zero(unsigned m) { return CycloNumber(m); }
  static CycloNumber one(unsigned m) { return rational(m, 1); }
  static CycloNumber rational(unsigned m, const mpq_class& q);
  /// zeta_m^k for any integer k.
  static CycloNumber root(unsigned m, std::int64_t k);
  /// Sum over k of counts[k] * zeta_m^k; counts has length m.
  static CycloNumber from_histogram(unsigned m, const std::vector<std::int64_t>& counts);
  static CycloNumber from_coefficients(unsigned m, std::vector<mpq_class> coeffs);

  unsigned m() const { return ctx_->m; }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  const CycloContext& context() const { return *ctx_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; meaningful when is_rational().
  const mpq_class& rational_part() const { return c_[0]; }

  CycloNumber operator+(const CycloNumber& o) const;
  CycloNumber operator-(const CycloNumber& o) const;
  CycloNumber operator-() const;
  CycloNumber operator*(const CycloNumber& o) const;
  CycloNumber operator*(const mpq_class& q) const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  /// this * zeta_m^k.
  CycloNumber times_root(std::int64_t k) const;
  /// Complex conjugate (zeta -> zeta^-1).
  CycloNumber conj() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, m) = 1.
  CycloNumber galois(unsigned k) const;
  /// Field norm down to Q.
  mpq_class norm() const;
  CycloNumber inverse() const;
  /// |z|^2 = z * conj(z), a totally real element.
  CycloNumber abs2() const { return *this * conj(); }

  /// If this equals zeta_m^k for some k, returns k; otherwise -1.
  int root_exponent() const;

  bool operator==(const CycloNumber& o) const;
  bool operator!=(const CycloNumber& o) const { return !(*this == o); }

  /// "[c0,c1,...]@m" with rational coefficients.
  std::string to_string() const;
  static CycloNumber parse(const std::string& text);

 private:
  void check_same(const CycloNumber& o) const;

  std::shared_ptr<const CycloContext> ctx_;
  std::vector<mpq_class> c_;
};

/// Sums of rational multiples of powers of zeta_m, kept unreduced (length m)
/// until result() is called.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(unsigned m);
  void add_root(std::int64_t k, const mpq_class& q = 1);
  /// acc += z * zeta^k.
  void add_times_root(const CycloNumber& z, std::int64_t k);
  CycloNumber result() const;

 private:
  unsigned m_;
  std::vector<mpq_class> acc_;
};

/// Root order used for phases over F_p: 8 for p = 2, 9 for p = 3, p otherwise.
unsigned default_root_order(std::uint32_t p);

}  // namespace magicrank
