#pragma once

#include <mpfr.h>

#include <string>

#include "magicrank/cyclo.hpp"

namespace magicrank {

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kPrecisionCapBits = 1u << 14;

/// Closed real interval [lo, hi] with MPFR endpoints, rounded outward.
class RealInterval {
 public:
  explicit RealInterval(unsigned prec = kDefaultPrecisionBits);
  RealInterval(const mpq_class& q, unsigned prec);
  RealInterval(const RealInterval& o);
  RealInterval& operator=(const RealInterval& o);
  ~RealInterval();

  unsigned precision() const { return prec_; }
  double lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }

  RealInterval operator+(const RealInterval& o) const;
  RealInterval operator*(const RealInterval& o) const;

  bool strictly_below(const RealInterval& o) const { return mpfr_less_p(hi_, o.lo_); }
  bool strictly_above(const RealInterval& o) const { return mpfr_greater_p(lo_, o.hi_); }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  int sign() const;  // 0 if the interval straddles or touches zero

  /// Certified enclosure of cos(2 pi k / m).
  static RealInterval cos_two_pi(std::int64_t k, unsigned m, unsigned prec);

  std::string to_string(int digits = 20) const;

 private:
  unsigned prec_;
  mpfr_t lo_, hi_;
};

/// Enclosure of Re(z).
RealInterval real_part(const CycloNumber& z, unsigned prec = kDefaultPrecisionBits);

/// Sign of Re(z), exact for zero and refined by doubling precision up to the
/// cap otherwise. Throws Indeterminate only if the cap is reached.
int certified_sign(const CycloNumber& z, unsigned prec = kDefaultPrecisionBits);

/// Sign of Re(a) - Re(b).
int compare_real(const CycloNumber& a, const CycloNumber& b, unsigned prec = kDefaultPrecisionBits);
int compare_real(const CycloNumber& a, const mpq_class& b, unsigned prec = kDefaultPrecisionBits);

}  // namespace magicrank
