#include "magicrank/ff.hpp"

#include <stdexcept>

#include "magicrank/errors.hpp"

namespace magicrank {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t ipow(std::uint64_t p, unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > (std::uint64_t{1} << 62) / p) throw BudgetExceeded("p^n overflows 62 bits");
    r *= p;
  }
  return r;
}

FpScalar::FpScalar(std::uint32_t p, std::int64_t value) : p_(p) {
  require_prime(p);
  auto r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  value_ = static_cast<std::uint32_t>(r);
}

FpScalar FpScalar::operator+(FpScalar o) const {
  if (o.p_ != p_) throw std::invalid_argument("mixed moduli");
  return {p_, static_cast<std::int64_t>(value_) + o.value_};
}

FpScalar FpScalar::operator-(FpScalar o) const {
  if (o.p_ != p_) throw std::invalid_argument("mixed moduli");
  return {p_, static_cast<std::int64_t>(value_) - o.value_};
}

FpScalar FpScalar::operator*(FpScalar o) const {
  if (o.p_ != p_) throw std::invalid_argument("mixed moduli");
  return {p_, static_cast<std::int64_t>(value_) * o.value_};
}

FpScalar FpScalar::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t base = value_, acc = 1, e = p_ - 2;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return {p_, static_cast<std::int64_t>(acc)};
}

FpVector::FpVector(std::uint32_t p, std::vector<std::uint32_t> entries)
    : p_(p), entries_(std::move(entries)) {
  require_prime(p);
  for (auto& e : entries_) e %= p_;
}

FpVector FpVector::zero(std::uint32_t p, unsigned n) {
  return FpVector(p, std::vector<std::uint32_t>(n, 0));
}

FpVector FpVector::from_index(std::uint32_t p, unsigned n, std::uint64_t index) {
  std::vector<std::uint32_t> e(n);
  for (unsigned i = n; i-- > 0;) {
    e[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return FpVector(p, std::move(e));
}

FpVector FpVector::unit(std::uint32_t p, unsigned n, unsigned i) {
  auto v = zero(p, n);
  v.entries_.at(i) = 1;
  return v;
}

std::uint64_t FpVector::index() const {
  std::uint64_t r = 0;
  for (auto e : entries_) r = r * p_ + e;
  return r;
}

bool FpVector::is_zero() const {
  for (auto e : entries_)
    if (e) return false;
  return true;
}

void FpVector::check_same(const FpVector& o) const {
  if (o.p_ != p_ || o.entries_.size() != entries_.size())
    throw std::invalid_argument("vector shape mismatch");
}

FpVector FpVector::operator+(const FpVector& o) const {
  check_same(o);
  FpVector r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = (entries_[i] + o.entries_[i]) % p_;
  return r;
}

FpVector FpVector::operator-(const FpVector& o) const {
  check_same(o);
  FpVector r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = (entries_[i] + p_ - o.entries_[i]) % p_;
  return r;
}

FpVector FpVector::operator-() const { return zero(p_, n()) - *this; }

FpVector FpVector::scaled(std::uint32_t c) const {
  FpVector r = *this;
  for (auto& e : r.entries_) e = static_cast<std::uint32_t>(std::uint64_t{e} * c % p_);
  return r;
}

FpVector FpVector::hadamard(const FpVector& o) const {
  check_same(o);
  FpVector r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = static_cast<std::uint32_t>(std::uint64_t{entries_[i]} * o.entries_[i] % p_);
  return r;
}

std::uint32_t FpVector::dot(const FpVector& o) const {
  check_same(o);
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) s += std::uint64_t{entries_[i]} * o.entries_[i];
  return static_cast<std::uint32_t>(s % p_);
}

std::string FpVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

std::uint64_t nat_lift(const FpScalar& x) { return x.value(); }

std::uint64_t nat_lift(const FpVector& x) {
  std::uint64_t s = 0;
  for (auto e : x.entries()) s += e;
  return s;
}

IdentitySides lift_identity_f2(const FpScalar& a, const FpScalar& b) {
  if (a.p() != 2 || b.p() != 2) throw std::invalid_argument("lift_identity_f2 needs p = 2");
  auto la = static_cast<std::int64_t>(nat_lift(a));
  auto lb = static_cast<std::int64_t>(nat_lift(b));
  return {static_cast<std::int64_t>(nat_lift(a + b)),
          la + lb - 2 * static_cast<std::int64_t>(nat_lift(a * b))};
}

IdentitySides lift_identity_f3(const FpScalar& a, const FpScalar& b) {
  if (a.p() != 3 || b.p() != 3) throw std::invalid_argument("lift_identity_f3 needs p = 3");
  auto lift = [](const FpScalar& x) { return static_cast<std::int64_t>(nat_lift(x)); };
  std::int64_t rhs = lift(a) + lift(b) + 3 * (lift(a * a * b) + lift(a * b * b)) - 6 * lift(a * b);
  rhs %= 9;
  if (rhs < 0) rhs += 9;
  return {lift(a + b) % 9, rhs};
}

}  // namespace magicrank
