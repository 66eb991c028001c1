#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magicrank/cyclo.hpp"
#include "magicrank/interval.hpp"
#include "magicrank/polynomial.hpp"

namespace magicrank {

/// e(t) = zeta_m^(m t); requires p^(depth+1) | m.
CycloNumber phase(const TorusValue& t, unsigned m);

/// Complex-valued function on F_p^n with values in Q(zeta_m).
class PhaseTable {
 public:
  PhaseTable(std::uint32_t p, unsigned n, unsigned m, std::vector<CycloNumber> values);
  /// e(f) pointwise.
  static PhaseTable of(const FunctionTable& f, unsigned m);
  static PhaseTable of(const NonclassicalPoly& poly, unsigned m);
  static PhaseTable constant(std::uint32_t p, unsigned n, unsigned m, const CycloNumber& c);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  std::uint64_t size() const { return values_.size(); }
  const std::vector<CycloNumber>& values() const { return values_; }
  const CycloNumber& at(std::uint64_t i) const { return values_[i]; }

  bool operator==(const PhaseTable&) const = default;

 private:
  std::uint32_t p_;
  unsigned n_;
  unsigned m_;
  std::vector<CycloNumber> values_;
};

/// x -> f(x + h) conj(f(x)).
PhaseTable mult_derivative(const PhaseTable& f, const FpVector& h);

/// f^(alpha) = E_x f(x) omega_p^<alpha, x>, indexed by alpha.
PhaseTable fourier_transform(const PhaseTable& f);
/// f(x) = sum_alpha f^(alpha) omega_p^-<alpha, x>.
PhaseTable inverse_fourier_transform(const PhaseTable& dual);

/// E_x f(x) conj(g(x)).
CycloNumber inner_product(const PhaseTable& f, const PhaseTable& g);
/// sum_alpha f^(alpha) conj(g^(alpha)).
CycloNumber dual_inner_product(const PhaseTable& fhat, const PhaseTable& ghat);

/// Exact |z|^2 with a certified enclosure.
struct RealValue {
  CycloNumber exact;
  RealInterval interval;
};

RealValue certify(const CycloNumber& real_value, unsigned prec = kDefaultPrecisionBits);

/// |<f, g>|^2.
RealValue correlation_sq(const PhaseTable& f, const PhaseTable& g, unsigned prec = kDefaultPrecisionBits);

/// <e(a), e(b)> from tables of values in units of 1/m.
CycloNumber phase_inner_product(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                unsigned m);

/// Values of f in units of 1/m.
std::vector<std::uint32_t> phase_exponents(const FunctionTable& f, unsigned m);

struct LovettReport {
  RealValue lhs;  // |<e(f), e(g)>|^4
  RealValue rhs;  // E_h |<e(D_h f), e(D_h g)>|^2
  bool holds;
};

LovettReport lovett_check(const FunctionTable& f, const FunctionTable& g, unsigned m,
                          unsigned prec = kDefaultPrecisionBits);

/// Budget for exhaustive scans: family size * p^n <= 2^26.
inline constexpr std::uint64_t kScanBudget = std::uint64_t{1} << 26;

struct ScanResult {
  RealValue max_corr_sq;
  NonclassicalPoly argmax;
  std::uint64_t candidates;
  std::uint64_t distinct_values;
  unsigned max_degree;
};

/// max over Q in the degree-(<= max_degree) family (shift zero) of |<e(P), e(Q)>|^2;
/// ties go to the smallest family index.
ScanResult correlation_scan(const NonclassicalPoly& target, unsigned max_degree,
                            unsigned prec = kDefaultPrecisionBits);
/// Degree-2 instance: every nonclassical quadratic, constants omitted.
ScanResult quadratic_scan(const NonclassicalPoly& target, unsigned prec = kDefaultPrecisionBits);

struct MagicBoundEntry {
  unsigned n;
  ScanResult scan;
  std::optional<mpq_class> bound_rhs;  // (3/4)^n, p = 2 only
  std::optional<bool> holds;           // max^4 <= (3/4)^n
};

struct MagicBoundReport {
  std::uint32_t p;
  std::vector<MagicBoundEntry> entries;  // n' = 1..n
  bool strictly_decreasing;
  bool holds;  // all bounds hold (p = 2) and decay is strict
};

MagicBoundReport magic_correlation_bound(std::uint32_t p, unsigned n, const Cubic& cubic = {},
                                         unsigned prec = kDefaultPrecisionBits);

}  // namespace magicrank
