#include "magicrank/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace magicrank {

namespace {

using IntPoly = std::vector<std::int64_t>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic divisor.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
  std::size_t dn = den.size() - 1;
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    auto c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("root order must be positive");
  static std::mutex mu;
  static std::map<unsigned, IntPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }
  IntPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  IntPoly den{1};
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  auto phi = poly_div_exact(num, den);
  std::lock_guard lock(mu);
  memo.emplace(m, phi);
  return phi;
}

std::shared_ptr<const CycloContext> CycloContext::get(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CycloContext>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  auto ctx = std::make_shared<CycloContext>();
  ctx->m = m;
  ctx->cyclotomic = cyclotomic_polynomial(m);
  ctx->phi = static_cast<unsigned>(ctx->cyclotomic.size() - 1);
  const unsigned phi = ctx->phi;
  IntPoly cur(phi, 0);
  if (phi > 0) cur[0] = 1;
  for (unsigned k = 0; k < 2 * m; ++k) {
    ctx->power.push_back(cur);
    // cur *= x, then reduce x^phi = -(c_0 + ... + c_{phi-1} x^{phi-1}).
    auto top = phi ? cur[phi - 1] : 0;
    for (unsigned i = phi; i-- > 1;) cur[i] = cur[i - 1];
    if (phi) cur[0] = 0;
    for (unsigned i = 0; i < phi; ++i) cur[i] -= top * ctx->cyclotomic[i];
  }
  for (unsigned k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ctx->units.push_back(k % m);
  std::lock_guard lock(mu);
  auto [it, _] = cache.emplace(m, std::move(ctx));
  return it->second;
}

unsigned default_root_order(std::uint32_t p) {
  if (p == 2) return 8;
  if (p == 3) return 9;
  return p;
}

CycloNumber::CycloNumber(unsigned m) : ctx_(CycloContext::get(m)), c_(ctx_->phi) {}

CycloNumber CycloNumber::rational(unsigned m, const mpq_class& q) {
  CycloNumber z(m);
  z.c_[0] = q;
  return z;
}

CycloNumber CycloNumber::root(unsigned m, std::int64_t k) {
  CycloNumber z(m);
  auto kk = k % static_cast<std::int64_t>(m);
  if (kk < 0) kk += m;
  const auto& pw = z.ctx_->power[static_cast<std::size_t>(kk)];
  for (unsigned i = 0; i < z.ctx_->phi; ++i) z.c_[i] = pw[i];
  return z;
}

CycloNumber CycloNumber::from_histogram(unsigned m, const std::vector<std::int64_t>& counts) {
  CycloNumber z(m);
  if (counts.size() != m) throw std::invalid_argument("histogram length must equal m");
  const auto& ctx = *z.ctx_;
  std::vector<std::int64_t> acc(ctx.phi, 0);
  for (unsigned k = 0; k < m; ++k) {
    if (!counts[k]) continue;
    for (unsigned i = 0; i < ctx.phi; ++i) acc[i] += counts[k] * ctx.power[k][i];
  }
  for (unsigned i = 0; i < ctx.phi; ++i) z.c_[i] = static_cast<long>(acc[i]);
  return z;
}

CycloNumber CycloNumber::from_coefficients(unsigned m, std::vector<mpq_class> coeffs) {
  CycloNumber z(m);
  if (coeffs.size() != z.ctx_->phi) throw std::invalid_argument("coefficient count must equal phi(m)");
  z.c_ = std::move(coeffs);
  for (auto& c : z.c_) c.canonicalize();
  return z;
}

void CycloNumber::check_same(const CycloNumber& o) const {
  if (o.ctx_->m != ctx_->m) throw std::invalid_argument("cyclotomic orders differ");
}

bool CycloNumber::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
  CycloNumber r = *this;
  r += o;
  return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
  CycloNumber r = *this;
  r -= o;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
  check_same(o);
  const auto& ctx = *ctx_;
  const unsigned phi = ctx.phi;
  std::vector<mpq_class> prod(phi ? 2 * phi - 1 : 0);
  for (unsigned i = 0; i < phi; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  CycloNumber r(ctx.m);
  for (unsigned k = 0; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    if (k < phi) {
      r.c_[k] += prod[k];
      continue;
    }
    const auto& pw = ctx.power[k];
    for (unsigned i = 0; i < phi; ++i)
      if (pw[i]) r.c_[i] += prod[k] * pw[i];
  }
  return r;
}

CycloNumber CycloNumber::operator*(const mpq_class& q) const {
  CycloNumber r = *this;
  for (auto& c : r.c_) c *= q;
  return r;
}

CycloNumber CycloNumber::times_root(std::int64_t k) const {
  CycloAccumulator acc(ctx_->m);
  acc.add_times_root(*this, k);
  return acc.result();
}

CycloNumber CycloNumber::galois(unsigned k) const {
  const unsigned m = ctx_->m;
  if (std::gcd(k, m) != 1) throw std::invalid_argument("galois exponent not a unit mod m");
  CycloAccumulator acc(m);
  for (unsigned i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) acc.add_root(static_cast<std::int64_t>(std::uint64_t{i} * k % m), c_[i]);
  return acc.result();
}

CycloNumber CycloNumber::conj() const { return galois(ctx_->m == 1 ? 1 : ctx_->m - 1); }

mpq_class CycloNumber::norm() const {
  CycloNumber prod = *this;
  for (auto k : ctx_->units)
    if (k != 1 % ctx_->m) prod = prod * galois(k);
  if (!prod.is_rational()) throw std::logic_error("norm not rational");
  return prod.c_[0];
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  CycloNumber others = CycloNumber::one(ctx_->m);
  for (auto k : ctx_->units)
    if (k != 1 % ctx_->m) others = others * galois(k);
  CycloNumber full = others * *this;
  if (!full.is_rational()) throw std::logic_error("norm not rational");
  mpq_class inv = 1 / full.c_[0];
  return others * inv;
}

int CycloNumber::root_exponent() const {
  const auto& ctx = *ctx_;
  for (unsigned k = 0; k < ctx.m; ++k) {
    bool eq = true;
    for (unsigned i = 0; i < ctx.phi && eq; ++i) eq = (c_[i] == ctx.power[k][i]);
    if (eq) return static_cast<int>(k);
  }
  return -1;
}

bool CycloNumber::operator==(const CycloNumber& o) const {
  if (o.ctx_->m != ctx_->m) return false;
  return c_ == o.c_;
}

std::string CycloNumber::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i].get_str();
  }
  os << "]@" << ctx_->m;
  return os.str();
}

CycloNumber CycloNumber::parse(const std::string& text) {
  auto at = text.rfind("]@");
  if (text.empty() || text.front() != '[' || at == std::string::npos)
    throw std::invalid_argument("malformed cyclotomic literal: " + text);
  unsigned m = static_cast<unsigned>(std::stoul(text.substr(at + 2)));
  std::vector<mpq_class> coeffs;
  std::string body = text.substr(1, at - 1);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    mpq_class q;
    if (q.set_str(tok, 10) != 0) throw std::invalid_argument("malformed rational: " + tok);
    coeffs.push_back(q);
  }
  return from_coefficients(m, std::move(coeffs));
}

CycloAccumulator::CycloAccumulator(unsigned m) : m_(m), acc_(m) {}

void CycloAccumulator::add_root(std::int64_t k, const mpq_class& q) {
  auto kk = k % static_cast<std::int64_t>(m_);
  if (kk < 0) kk += m_;
  acc_[static_cast<std::size_t>(kk)] += q;
}

void CycloAccumulator::add_times_root(const CycloNumber& z, std::int64_t k) {
  const auto& c = z.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) add_root(static_cast<std::int64_t>(i) + k, c[i]);
}

CycloNumber CycloAccumulator::result() const {
  auto ctx = CycloContext::get(m_);
  std::vector<mpq_class> c(ctx->phi);
  for (unsigned k = 0; k < m_; ++k) {
    if (sgn(acc_[k]) == 0) continue;
    const auto& pw = ctx->power[k];
    for (unsigned i = 0; i < ctx->phi; ++i)
      if (pw[i]) c[i] += acc_[k] * pw[i];
  }
  return CycloNumber::from_coefficients(m_, std::move(c));
}

}  // namespace magicrank
