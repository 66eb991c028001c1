#include "magicrank/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "magicrank/errors.hpp"
#include "magicrank/kernels.hpp"

namespace magicrank {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// prod_t |x_t|^i_t reduced mod `mod`.
std::uint64_t monomial_value(const Monomial& mono, const std::uint32_t* x, std::uint64_t mod) {
  std::uint64_t v = 1 % mod;
  for (std::size_t t = 0; t < mono.exponents.size(); ++t)
    for (unsigned e = 0; e < mono.exponents[t]; ++e) v = mulmod(v, x[t], mod);
  return v;
}

std::vector<std::uint32_t> point_digits(std::uint32_t p, unsigned n, std::uint64_t count) {
  std::vector<std::uint32_t> d(count * n);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto v = idx;
    for (unsigned i = n; i-- > 0;) {
      d[idx * n + i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
  }
  return d;
}

// Inverse of the Vandermonde matrix V[a][i] = a^i over F_p (0^0 = 1).
std::vector<std::vector<std::uint32_t>> vandermonde_inverse(std::uint32_t p) {
  std::vector<std::vector<std::uint64_t>> aug(p, std::vector<std::uint64_t>(2 * p, 0));
  for (std::uint32_t a = 0; a < p; ++a) {
    std::uint64_t pw = 1;
    for (std::uint32_t i = 0; i < p; ++i) {
      aug[a][i] = pw;
      pw = pw * a % p;
    }
    aug[a][p + a] = 1;
  }
  for (std::uint32_t c = 0; c < p; ++c) {
    std::uint32_t sel = c;
    while (aug[sel][c] == 0) ++sel;
    std::swap(aug[c], aug[sel]);
    auto inv = FpScalar(p, static_cast<std::int64_t>(aug[c][c])).inverse().value();
    for (auto& e : aug[c]) e = e * inv % p;
    for (std::uint32_t r = 0; r < p; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      auto f = aug[r][c];
      for (std::uint32_t k = 0; k < 2 * p; ++k) aug[r][k] = (aug[r][k] + (p - f) * aug[c][k]) % p;
    }
  }
  std::vector<std::vector<std::uint32_t>> inv(p, std::vector<std::uint32_t>(p));
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t a = 0; a < p; ++a) inv[i][a] = static_cast<std::uint32_t>(aug[i][p + a]);
  return inv;
}

// Classical interpolation: values over F_p^n -> coefficients indexed by the
// exponent tuple read as base-p digits (i_1 most significant).
std::vector<std::uint32_t> classical_coefficients(std::vector<std::uint32_t> v, std::uint32_t p, unsigned n) {
  auto vinv = vandermonde_inverse(p);
  std::vector<std::uint32_t> line(p), out(p);
  std::uint64_t stride = 1;
  for (unsigned axis = 0; axis < n; ++axis, stride *= p) {
    const std::uint64_t block = stride * p;
    for (std::uint64_t base = 0; base < v.size(); base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t a = 0; a < p; ++a) line[a] = v[base + off + a * stride];
        for (std::uint32_t i = 0; i < p; ++i) {
          std::uint64_t s = 0;
          for (std::uint32_t a = 0; a < p; ++a) s += std::uint64_t{vinv[i][a]} * line[a];
          out[i] = static_cast<std::uint32_t>(s % p);
        }
        for (std::uint32_t i = 0; i < p; ++i) v[base + off + i * stride] = out[i];
      }
    }
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

}  // namespace

unsigned Monomial::total_degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

FunctionTable::FunctionTable(std::uint32_t p, unsigned n, std::vector<TorusValue> values)
    : p_(p), n_(n), values_(std::move(values)) {
  require_prime(p);
  if (values_.size() != ipow(p, n)) throw std::invalid_argument("function table: wrong number of values");
  for (const auto& v : values_)
    if (v.p() != p && !v.is_zero()) throw std::invalid_argument("function table: mixed moduli");
  for (auto& v : values_)
    if (v.p() != p) v = TorusValue(p);
}

FunctionTable FunctionTable::zeros(std::uint32_t p, unsigned n) {
  return FunctionTable(p, n, std::vector<TorusValue>(ipow(p, n), TorusValue(p)));
}

const TorusValue& FunctionTable::at(const FpVector& x) const {
  if (x.p() != p_ || x.n() != n_) throw std::invalid_argument("function table: dimension mismatch");
  return values_[x.index()];
}

unsigned FunctionTable::max_depth() const {
  unsigned k = 0;
  for (const auto& v : values_) k = std::max(k, v.depth());
  return k;
}

bool FunctionTable::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const TorusValue& v) { return v.is_zero(); });
}

NonclassicalPoly::NonclassicalPoly(std::uint32_t p, unsigned n, TorusValue shift,
                                   std::map<Monomial, std::uint32_t> terms)
    : p_(p), n_(n), shift_(std::move(shift)) {
  require_prime(p);
  if (shift_.p() != p) {
    if (!shift_.is_zero()) throw std::invalid_argument("polynomial shift has the wrong modulus");
    shift_ = TorusValue(p);
  }
  for (auto& [mono, c] : terms) {
    if (mono.exponents.size() != n) throw std::invalid_argument("monomial arity mismatch");
    if (mono.total_degree() == 0) throw std::invalid_argument("monomial must have a positive exponent");
    for (auto e : mono.exponents)
      if (e >= p) throw std::invalid_argument("monomial exponent must be below p");
    if (mono.level > max_torus_depth(p)) throw std::invalid_argument("monomial level too deep");
    auto cc = c % p;
    if (cc) terms_.emplace(mono, cc);
  }
}

NonclassicalPoly NonclassicalPoly::weight(std::uint32_t p, unsigned n, unsigned level) {
  std::map<Monomial, std::uint32_t> terms;
  for (unsigned t = 0; t < n; ++t) {
    Monomial mono{std::vector<std::uint8_t>(n, 0), level};
    mono.exponents[t] = 1;
    terms.emplace(std::move(mono), 1);
  }
  return NonclassicalPoly(p, n, TorusValue(p), std::move(terms));
}

NonclassicalPoly NonclassicalPoly::constant(std::uint32_t p, unsigned n, TorusValue shift) {
  return NonclassicalPoly(p, n, std::move(shift));
}

NonclassicalPoly NonclassicalPoly::classical(std::uint32_t p, unsigned n,
                                             const std::map<std::vector<std::uint8_t>, std::uint32_t>& coeffs,
                                             std::uint32_t constant_term) {
  std::map<Monomial, std::uint32_t> terms;
  for (const auto& [e, c] : coeffs) terms.emplace(Monomial{e, 0}, c);
  return NonclassicalPoly(p, n, TorusValue(p, constant_term, 0), std::move(terms));
}

unsigned NonclassicalPoly::value_depth() const {
  unsigned k = shift_.depth();
  for (const auto& [mono, c] : terms_) k = std::max(k, mono.level);
  return k;
}

TorusValue NonclassicalPoly::evaluate(const FpVector& x) const {
  if (x.p() != p_ || x.n() != n_) throw std::invalid_argument("evaluate: dimension mismatch");
  const unsigned k = value_depth();
  const auto mod = ipow(p_, k + 1);
  std::uint64_t acc = shift_.numerator_at(k);
  std::vector<std::uint32_t> xs(x.entries().begin(), x.entries().end());
  for (const auto& [mono, c] : terms_) {
    auto v = monomial_value(mono, xs.data(), mod);
    v = mulmod(v, c, mod);
    v = mulmod(v, ipow(p_, k - mono.level), mod);
    acc = (acc + v) % mod;
  }
  return TorusValue(p_, static_cast<std::int64_t>(acc), k);
}

FunctionTable NonclassicalPoly::table() const {
  const auto count = ipow(p_, n_);
  std::vector<TorusValue> vals;
  vals.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) vals.push_back(evaluate(FpVector::from_index(p_, n_, i)));
  return FunctionTable(p_, n_, std::move(vals));
}

unsigned NonclassicalPoly::representation_degree() const {
  unsigned d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.total_degree() + mono.level * (p_ - 1));
  return d;
}

unsigned NonclassicalPoly::depth() const {
  unsigned j = 0;
  for (const auto& [mono, c] : terms_) j = std::max(j, mono.level);
  return j;
}

namespace {

FunctionTable pointwise(const FunctionTable& a, const FunctionTable& b, bool subtract) {
  if (a.p() != b.p() || a.n() != b.n()) throw std::invalid_argument("table shape mismatch");
  std::vector<TorusValue> v;
  v.reserve(a.size());
  for (std::uint64_t i = 0; i < a.size(); ++i) v.push_back(subtract ? a.at(i) - b.at(i) : a.at(i) + b.at(i));
  return FunctionTable(a.p(), a.n(), std::move(v));
}

}  // namespace

NonclassicalPoly NonclassicalPoly::operator+(const NonclassicalPoly& o) const {
  return interpolate(pointwise(table(), o.table(), false));
}

NonclassicalPoly NonclassicalPoly::operator-() const {
  return interpolate(pointwise(FunctionTable::zeros(p_, n_), table(), true));
}

std::string NonclassicalPoly::to_text() const {
  std::ostringstream os;
  os << p_ << " " << n_ << " " << shift_.numerator() << " " << shift_.depth();
  for (const auto& [mono, c] : terms_) {
    os << " ;";
    for (auto e : mono.exponents) os << " " << static_cast<unsigned>(e);
    os << " | " << mono.level << " | " << c;
  }
  return os.str();
}

NonclassicalPoly NonclassicalPoly::parse(const std::string& text) {
  auto parts = split(text, ';');
  if (parts.empty()) throw std::invalid_argument("polynomial text: empty");
  std::istringstream head(parts[0]);
  long p = 0, n = -1, snum = 0, sdepth = 0;
  if (!(head >> p >> n >> snum >> sdepth) || n < 0 || snum < 0 || sdepth < 0)
    throw std::invalid_argument("polynomial text: bad header");
  require_prime(static_cast<std::uint32_t>(p));
  const auto pp = static_cast<std::uint32_t>(p);
  const auto nn = static_cast<unsigned>(n);
  TorusValue shift(pp, snum, static_cast<unsigned>(sdepth));
  std::map<Monomial, std::uint32_t> terms;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    auto fields = split(parts[k], '|');
    if (fields.size() != 3) throw std::invalid_argument("polynomial text: term needs 'exps | level | coeff'");
    std::istringstream es(fields[0]);
    Monomial mono;
    long e;
    while (es >> e) {
      if (e < 0 || e >= p) throw std::invalid_argument("polynomial text: exponent out of range");
      mono.exponents.push_back(static_cast<std::uint8_t>(e));
    }
    if (mono.exponents.size() != nn) throw std::invalid_argument("polynomial text: exponent count");
    long level = std::stol(fields[1]);
    long c = std::stol(fields[2]);
    if (level < 0 || c <= 0 || c >= p) throw std::invalid_argument("polynomial text: bad level or coefficient");
    mono.level = static_cast<unsigned>(level);
    if (!terms.emplace(mono, static_cast<std::uint32_t>(c)).second)
      throw std::invalid_argument("polynomial text: repeated term");
  }
  return NonclassicalPoly(pp, nn, shift, std::move(terms));
}

FunctionTable additive_derivative(const FunctionTable& t, const FpVector& h) {
  if (h.p() != t.p() || h.n() != t.n()) throw std::invalid_argument("derivative: direction shape");
  std::vector<TorusValue> v;
  v.reserve(t.size());
  for (std::uint64_t i = 0; i < t.size(); ++i) {
    auto x = FpVector::from_index(t.p(), t.n(), i);
    v.push_back(t.at(x + h) - t.at(i));
  }
  return FunctionTable(t.p(), t.n(), std::move(v));
}

FunctionTable additive_derivative(const NonclassicalPoly& poly, const FpVector& h) {
  return additive_derivative(poly.table(), h);
}

namespace {

void check_scan_budget(std::uint32_t p, unsigned n, unsigned d) {
  // p^(n(d+2)) <= 2^24
  std::uint64_t work = 1;
  for (unsigned i = 0; i < n * (d + 2); ++i) {
    work *= p;
    if (work > kDegreeScanBudget)
      throw BudgetExceeded("degree scan needs p^(n(d+2)) > 2^24 evaluations (p=" + std::to_string(p) +
                           ", n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
}

unsigned scan_degree(const FunctionTable& t, unsigned expected) {
  check_scan_budget(t.p(), t.n(), expected);
  const unsigned k = t.max_depth();
  const auto mod = ipow(t.p(), k + 1);
  std::vector<std::uint64_t> nums;
  nums.reserve(t.size());
  for (const auto& v : t.values()) nums.push_back(v.numerator_at(k));
  return kernels::parallel::max_nonvanishing_order(nums, mod, t.p(), t.n(), expected + 1);
}

}  // namespace

unsigned degree(const FunctionTable& t) {
  const unsigned rep = interpolate(t).representation_degree();
  const unsigned scanned = scan_degree(t, rep);
  if (scanned != rep)
    throw std::logic_error("degree mismatch: derivative scan " + std::to_string(scanned) + " vs representation " +
                           std::to_string(rep));
  return scanned;
}

unsigned degree(const NonclassicalPoly& poly) {
  const unsigned rep = poly.representation_degree();
  const unsigned scanned = scan_degree(poly.table(), rep);
  if (scanned != rep)
    throw std::logic_error("degree mismatch: derivative scan " + std::to_string(scanned) + " vs representation " +
                           std::to_string(rep));
  return scanned;
}

unsigned depth(const NonclassicalPoly& poly) { return poly.depth(); }

bool is_classical(const NonclassicalPoly& poly) { return poly.is_classical(); }

NonclassicalPoly interpolate(const FunctionTable& t, std::optional<unsigned> max_degree) {
  const auto p = t.p();
  const auto n = t.n();
  const auto count = t.size();
  const TorusValue shift = t.at(0);
  const unsigned top = t.max_depth();
  auto digits = point_digits(p, n, count);

  std::uint64_t mod = ipow(p, top + 1);
  std::vector<std::uint64_t> num(count);
  for (std::uint64_t x = 0; x < count; ++x) num[x] = (t.at(x) - shift).numerator_at(top);

  std::map<Monomial, std::uint32_t> terms;
  std::vector<std::uint32_t> residues(count);
  for (unsigned level = top + 1; level-- > 0;) {
    for (std::uint64_t x = 0; x < count; ++x) residues[x] = static_cast<std::uint32_t>(num[x] % p);
    auto coeffs = classical_coefficients(residues, p, n);
    for (std::uint64_t ei = 0; ei < coeffs.size(); ++ei) {
      if (coeffs[ei] == 0) continue;
      Monomial mono{std::vector<std::uint8_t>(n), level};
      auto v = ei;
      for (unsigned i = n; i-- > 0;) {
        mono.exponents[i] = static_cast<std::uint8_t>(v % p);
        v /= p;
      }
      if (mono.total_degree() == 0) throw std::logic_error("interpolate: constant residue after shift removal");
      for (std::uint64_t x = 0; x < count; ++x) {
        auto mv = mulmod(monomial_value(mono, &digits[x * n], mod), coeffs[ei], mod);
        num[x] = (num[x] + mod - mv) % mod;
      }
      terms.emplace(std::move(mono), coeffs[ei]);
    }
    for (auto& v : num) {
      if (v % p != 0) throw std::logic_error("interpolate: residual not divisible by p");
      v /= p;
    }
    mod /= p;
  }
  NonclassicalPoly poly(p, n, shift, std::move(terms));
  if (max_degree && poly.representation_degree() > *max_degree)
    throw std::invalid_argument("interpolate: table has degree " + std::to_string(poly.representation_degree()) +
                                " above the budget " + std::to_string(*max_degree));
  return poly;
}

FunctionTable restrict(const FunctionTable& t, const AffineMap& a) {
  if (a.p() != t.p() || a.codomain_dim() != t.n()) throw std::invalid_argument("restrict: map codomain mismatch");
  const auto count = ipow(a.p(), a.domain_dim());
  std::vector<TorusValue> v;
  v.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) v.push_back(t.at(a(FpVector::from_index(a.p(), a.domain_dim(), i))));
  return FunctionTable(a.p(), a.domain_dim(), std::move(v));
}

FunctionTable restrict(const NonclassicalPoly& poly, const AffineMap& a) { return restrict(poly.table(), a); }

PolynomialFamily::PolynomialFamily(std::uint32_t p, unsigned n, unsigned max_degree)
    : PolynomialFamily(p, n, max_degree, max_degree) {}

PolynomialFamily::PolynomialFamily(std::uint32_t p, unsigned n, unsigned max_degree, unsigned max_level)
    : p_(p), n_(n) {
  require_prime(p);
  const auto tuples = ipow(p, n);
  for (unsigned j = 0; j <= max_level && j * (p - 1) < max_degree; ++j) {
    const unsigned cap = max_degree - j * (p - 1);
    for (std::uint64_t ei = 1; ei < tuples; ++ei) {
      Monomial mono{std::vector<std::uint8_t>(n), j};
      auto v = ei;
      for (unsigned i = n; i-- > 0;) {
        mono.exponents[i] = static_cast<std::uint8_t>(v % p);
        v /= p;
      }
      if (mono.total_degree() <= cap) monos_.push_back(std::move(mono));
    }
  }
  std::sort(monos_.begin(), monos_.end());
}

std::uint64_t PolynomialFamily::size() const { return ipow(p_, static_cast<unsigned>(monos_.size())); }

NonclassicalPoly PolynomialFamily::member(std::uint64_t index) const {
  std::map<Monomial, std::uint32_t> terms;
  for (const auto& mono : monos_) {
    auto c = static_cast<std::uint32_t>(index % p_);
    index /= p_;
    if (c) terms.emplace(mono, c);
  }
  return NonclassicalPoly(p_, n_, TorusValue(p_), std::move(terms));
}

void PolynomialFamily::prepare(unsigned m) {
  const auto count = ipow(p_, n_);
  auto digits = point_digits(p_, n_, count);
  mono_exps_.clear();
  for (const auto& mono : monos_) {
    const auto den = ipow(p_, mono.level + 1);
    if (m % den != 0) throw std::invalid_argument("family: root order not divisible by monomial denominator");
    std::vector<std::uint32_t> e(count);
    for (std::uint64_t x = 0; x < count; ++x)
      e[x] = static_cast<std::uint32_t>(monomial_value(mono, &digits[x * n_], den) * (m / den) % m);
    mono_exps_.push_back(std::move(e));
  }
  prepared_m_ = m;
}

void PolynomialFamily::exponents(std::uint64_t index, unsigned m, std::vector<std::uint32_t>& out) const {
  if (m != prepared_m_) throw std::logic_error("family: prepare(m) not called for this root order");
  out.assign(ipow(p_, n_), 0u);
  for (const auto& tab : mono_exps_) {
    auto c = static_cast<std::uint32_t>(index % p_);
    index /= p_;
    if (!c) continue;
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = (out[x] + c * tab[x]) % m;
  }
}

}  // namespace magicrank

namespace magicrank {

NonclassicalPoly magic_polynomial(std::uint32_t p, unsigned n, const Cubic& cubic) {
  require_prime(p);
  if (p == 2) return NonclassicalPoly::weight(2, n, 2);
  if (p == 3) return NonclassicalPoly::weight(3, n, 1);
  if (cubic.a % p == 0) throw std::invalid_argument("magic polynomial needs a cubic of degree exactly three");
  std::map<std::vector<std::uint8_t>, std::uint32_t> coeffs;
  for (unsigned t = 0; t < n; ++t) {
    const std::uint32_t c[] = {cubic.c % p, cubic.b % p, cubic.a % p};
    for (unsigned e = 1; e <= 3; ++e) {
      if (!c[e - 1]) continue;
      std::vector<std::uint8_t> ex(n, 0);
      ex[t] = static_cast<std::uint8_t>(e);
      coeffs[ex] = c[e - 1];
    }
  }
  return NonclassicalPoly::classical(p, n, coeffs);
}

}  // namespace magicrank
