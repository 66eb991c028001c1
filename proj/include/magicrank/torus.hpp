#pragma once

#include <cstdint>
#include <string>

namespace magicrank {

/// Element numerator / p^(depth+1) of the p-power torsion of T = R/Z.
///
/// Always kept canonical: 0 <= numerator < p^(depth+1) and either p does not
/// divide the numerator or depth == 0.
class TorusValue {
 public:
  /// Zero of T with modulus p.
  explicit TorusValue(std::uint32_t p = 2) : p_(p) {}
  /// numerator / p^(depth+1) mod 1; numerator may be any integer.
  TorusValue(std::uint32_t p, std::int64_t numerator, unsigned depth);

  std::uint32_t p() const { return p_; }
  std::uint64_t numerator() const { return num_; }
  unsigned depth() const { return depth_; }
  std::uint64_t denominator() const;
  bool is_zero() const { return num_ == 0; }

  /// Numerator over p^(k+1) for k >= depth().
  std::uint64_t numerator_at(unsigned k) const;

  TorusValue operator+(const TorusValue& o) const;
  TorusValue operator-(const TorusValue& o) const;
  TorusValue operator-() const;
  TorusValue scaled(std::int64_t c) const;
  /// p * t; lowers the depth by one (values of depth 0 map to 0).
  TorusValue times_p() const;

  bool operator==(const TorusValue&) const = default;

  /// "num/den" with den = p^(depth+1); "0" for zero.
  std::string to_string() const;

 private:
  void normalize();

  std::uint32_t p_;
  std::uint64_t num_ = 0;
  unsigned depth_ = 0;
};

/// Largest depth representable before p^(depth+1) leaves the 62-bit range.
unsigned max_torus_depth(std::uint32_t p);

}  // namespace magicrank
