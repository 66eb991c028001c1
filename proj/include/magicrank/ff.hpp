#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace magicrank {

bool is_prime(std::uint32_t p);

/// Throws std::invalid_argument unless p is prime.
void require_prime(std::uint32_t p);

/// p^n, throwing BudgetExceeded if it does not fit comfortably in 63 bits.
std::uint64_t ipow(std::uint64_t p, unsigned n);

/// Element of F_p, always stored as its representative in {0, ..., p-1}.
class FpScalar {
 public:
  FpScalar(std::uint32_t p, std::int64_t value);

  std::uint32_t p() const { return p_; }
  std::uint32_t value() const { return value_; }

  FpScalar operator+(FpScalar o) const;
  FpScalar operator-(FpScalar o) const;
  FpScalar operator*(FpScalar o) const;
  FpScalar inverse() const;
  bool operator==(const FpScalar&) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t value_;
};

/// Vector in F_p^n. Points of F_p^n are indexed with x_1 as the most
/// significant base-p digit, so index order is lexicographic order.
class FpVector {
 public:
  FpVector() = default;
  FpVector(std::uint32_t p, std::vector<std::uint32_t> entries);
  static FpVector zero(std::uint32_t p, unsigned n);
  static FpVector from_index(std::uint32_t p, unsigned n, std::uint64_t index);
  static FpVector unit(std::uint32_t p, unsigned n, unsigned i);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return static_cast<unsigned>(entries_.size()); }
  std::uint32_t operator[](unsigned i) const { return entries_[i]; }
  std::span<const std::uint32_t> entries() const { return entries_; }
  void set(unsigned i, std::uint32_t v) { entries_[i] = v % p_; }

  std::uint64_t index() const;
  bool is_zero() const;

  FpVector operator+(const FpVector& o) const;
  FpVector operator-(const FpVector& o) const;
  FpVector operator-() const;
  FpVector scaled(std::uint32_t c) const;
  /// Entry-wise product x ∘ y.
  FpVector hadamard(const FpVector& o) const;
  std::uint32_t dot(const FpVector& o) const;

  bool operator==(const FpVector&) const = default;
  auto operator<=>(const FpVector&) const = default;

  std::string to_string() const;

 private:
  void check_same(const FpVector& o) const;

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> entries_;
};

/// The natural lift |x| in {0, ..., p-1}.
std::uint64_t nat_lift(const FpScalar& x);
/// |x_1| + ... + |x_n|.
std::uint64_t nat_lift(const FpVector& x);

struct IdentitySides {
  std::int64_t lhs;
  std::int64_t rhs;
};

/// Both sides of |a+b| = |a| + |b| - 2|ab| over F_2.
IdentitySides lift_identity_f2(const FpScalar& a, const FpScalar& b);
/// Both sides of |a+b| = |a| + |b| + 3(|a^2 b| + |a b^2|) - 6|ab| (mod 9) over F_3,
/// each reduced into {0, ..., 8}.
IdentitySides lift_identity_f3(const FpScalar& a, const FpScalar& b);

}  // namespace magicrank
