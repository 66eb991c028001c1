#include "magicrank/interval.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "magicrank/errors.hpp"

namespace magicrank {

RealInterval::RealInterval(unsigned prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const mpq_class& q, unsigned prec) : RealInterval(prec) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

RealInterval::RealInterval(const RealInterval& o) : RealInterval(o.prec_) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
  if (this != &o) {
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
  RealInterval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
  const unsigned prec = std::max(prec_, o.prec_);
  RealInterval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (auto* a : {&lo_, &hi_}) {
    for (auto* b : {&o.lo_, &o.hi_}) {
      mpfr_mul(t, *a, *b, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *a, *b, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

int RealInterval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

RealInterval RealInterval::cos_two_pi(std::int64_t k, unsigned m, unsigned prec) {
  auto kk = k % static_cast<std::int64_t>(m);
  if (kk < 0) kk += m;
  // cos(2 pi k/m) = cos(2 pi (m-k)/m); fold into an angle in [0, pi].
  if (2 * kk > static_cast<std::int64_t>(m)) kk = m - kk;
  RealInterval r(prec);
  if (kk == 0) {
    mpfr_set_si(r.lo_, 1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  if (2 * kk == static_cast<std::int64_t>(m)) {
    mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    mpfr_set_si(r.hi_, -1, MPFR_RNDU);
    return r;
  }
  const unsigned wp = prec + 16;
  mpfr_t pi_lo, pi_hi, th_lo, th_hi;
  mpfr_inits2(wp, pi_lo, pi_hi, th_lo, th_hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  mpfr_mul_si(th_lo, pi_lo, 2 * kk, MPFR_RNDD);
  mpfr_div_ui(th_lo, th_lo, m, MPFR_RNDD);
  mpfr_mul_si(th_hi, pi_hi, 2 * kk, MPFR_RNDU);
  mpfr_div_ui(th_hi, th_hi, m, MPFR_RNDU);
  // The angle lies strictly inside (0, pi), where cos is decreasing.
  mpfr_cos(r.lo_, th_hi, MPFR_RNDD);
  mpfr_cos(r.hi_, th_lo, MPFR_RNDU);
  mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, static_cast<mpfr_ptr>(nullptr));
  return r;
}

std::string RealInterval::to_string(int digits) const {
  auto fmt = [digits](const mpfr_t x, mpfr_rnd_t rnd) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, rnd == MPFR_RNDD ? "%.*RDg" : "%.*RUg", digits, x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  };
  return "[" + fmt(lo_, MPFR_RNDD) + ", " + fmt(hi_, MPFR_RNDU) + "]";
}

RealInterval real_part(const CycloNumber& z, unsigned prec) {
  RealInterval acc(prec);
  const auto& c = z.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    acc = acc + RealInterval(c[i], prec) * RealInterval::cos_two_pi(static_cast<std::int64_t>(i), z.m(), prec);
  }
  return acc;
}

namespace {

// Re(z) = 0 exactly iff z + conj(z) = 0.
bool real_part_is_zero(const CycloNumber& z) { return (z + z.conj()).is_zero(); }

}  // namespace

int certified_sign(const CycloNumber& z, unsigned prec) {
  if (real_part_is_zero(z)) return 0;
  for (unsigned p = std::max(prec, 32u); p <= kPrecisionCapBits; p *= 2) {
    int s = real_part(z, p).sign();
    if (s != 0) return s;
  }
  throw Indeterminate("sign not resolved at " + std::to_string(kPrecisionCapBits) + " bits");
}

int compare_real(const CycloNumber& a, const CycloNumber& b, unsigned prec) {
  return certified_sign(a - b, prec);
}

int compare_real(const CycloNumber& a, const mpq_class& b, unsigned prec) {
  return certified_sign(a - CycloNumber::rational(a.m(), b), prec);
}

}  // namespace magicrank
