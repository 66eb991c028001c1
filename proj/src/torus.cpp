#include "magicrank/torus.hpp"

#include <algorithm>
#include <stdexcept>

#include "magicrank/ff.hpp"

namespace magicrank {

unsigned max_torus_depth(std::uint32_t p) {
  unsigned k = 0;
  std::uint64_t den = p;
  while (den <= (std::uint64_t{1} << 40) / p) {
    den *= p;
    ++k;
  }
  return k;
}

TorusValue::TorusValue(std::uint32_t p, std::int64_t numerator, unsigned depth) : p_(p), depth_(depth) {
  require_prime(p);
  if (depth > max_torus_depth(p)) throw std::invalid_argument("torus depth too large");
  auto den = static_cast<std::int64_t>(ipow(p, depth + 1));
  auto r = numerator % den;
  if (r < 0) r += den;
  num_ = static_cast<std::uint64_t>(r);
  normalize();
}

std::uint64_t TorusValue::denominator() const { return ipow(p_, depth_ + 1); }

std::uint64_t TorusValue::numerator_at(unsigned k) const {
  if (k < depth_) throw std::invalid_argument("numerator_at below depth");
  return num_ * ipow(p_, k - depth_);
}

void TorusValue::normalize() {
  while (depth_ > 0 && num_ % p_ == 0) {
    num_ /= p_;
    --depth_;
  }
}

TorusValue TorusValue::operator+(const TorusValue& o) const {
  if (o.p_ != p_) throw std::invalid_argument("torus values with different p");
  unsigned k = std::max(depth_, o.depth_);
  auto den = ipow(p_, k + 1);
  return TorusValue(p_, static_cast<std::int64_t>((numerator_at(k) + o.numerator_at(k)) % den), k);
}

TorusValue TorusValue::operator-() const {
  return TorusValue(p_, -static_cast<std::int64_t>(num_), depth_);
}

TorusValue TorusValue::operator-(const TorusValue& o) const { return *this + (-o); }

TorusValue TorusValue::scaled(std::int64_t c) const {
  auto den = static_cast<std::int64_t>(denominator());
  auto cc = c % den;
  if (cc < 0) cc += den;
  auto prod = static_cast<unsigned __int128>(num_) * static_cast<unsigned __int128>(cc) % den;
  return TorusValue(p_, static_cast<std::int64_t>(prod), depth_);
}

TorusValue TorusValue::times_p() const {
  if (depth_ == 0) return TorusValue(p_);
  return TorusValue(p_, static_cast<std::int64_t>(num_), depth_ - 1);
}

std::string TorusValue::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(denominator());
}

}  // namespace magicrank
