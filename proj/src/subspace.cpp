#include "magicrank/subspace.hpp"

#include <sstream>
#include <stdexcept>

#include "magicrank/errors.hpp"
#include "magicrank/fp_linalg.hpp"
#include "magicrank/kernels.hpp"

namespace magicrank {

AffineMap::AffineMap(std::uint32_t p, unsigned domain_dim, unsigned codomain_dim, std::vector<FpVector> columns,
                     FpVector translation)
    : p_(p), m_(domain_dim), n_(codomain_dim), cols_(std::move(columns)), t_(std::move(translation)) {
  if (cols_.size() != m_) throw std::invalid_argument("affine map: column count != domain dimension");
  for (const auto& c : cols_)
    if (c.p() != p_ || c.n() != n_) throw std::invalid_argument("affine map: column shape");
  if (t_.p() != p_ || t_.n() != n_) throw std::invalid_argument("affine map: translation shape");
}

AffineMap AffineMap::identity(std::uint32_t p, unsigned n) {
  std::vector<FpVector> cols;
  for (unsigned i = 0; i < n; ++i) cols.push_back(FpVector::unit(p, n, i));
  return AffineMap(p, n, n, std::move(cols), FpVector::zero(p, n));
}

FpVector AffineMap::operator()(const FpVector& y) const {
  if (y.n() != m_ || y.p() != p_) throw std::invalid_argument("affine map: argument shape");
  FpVector r = t_;
  for (unsigned j = 0; j < m_; ++j)
    if (y[j]) r = r + cols_[j].scaled(y[j]);
  return r;
}

AffineSubspace::AffineSubspace(const FpVector& point, const std::vector<FpVector>& generators) {
  canonicalize(point, generators);
}

void AffineSubspace::canonicalize(const FpVector& point, const std::vector<FpVector>& generators) {
  auto e = rref(generators, point.p(), point.n());
  basis_ = std::move(e.rows);
  pivots_ = std::move(e.pivots);
  offset_ = point;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    auto c = offset_[pivots_[r]];
    if (c) offset_ = offset_ - basis_[r].scaled(c);
  }
}

AffineSubspace AffineSubspace::full(std::uint32_t p, unsigned n) {
  std::vector<FpVector> gens;
  for (unsigned i = 0; i < n; ++i) gens.push_back(FpVector::unit(p, n, i));
  return AffineSubspace(FpVector::zero(p, n), gens);
}

AffineSubspace AffineSubspace::single_point(const FpVector& v) { return AffineSubspace(v, {}); }

std::optional<AffineSubspace> AffineSubspace::from_equations(const std::vector<FpVector>& rows,
                                                             const std::vector<std::uint32_t>& rhs,
                                                             std::uint32_t p, unsigned n) {
  auto part = solve_particular(rows, rhs, p, n);
  if (!part) return std::nullopt;
  return AffineSubspace(*part, nullspace(rows, p, n));
}

bool AffineSubspace::contains(const FpVector& x) const {
  if (x.p() != p() || x.n() != n()) throw std::invalid_argument("membership: dimension mismatch");
  FpVector d = x - offset_;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    auto c = d[pivots_[r]];
    if (c) d = d - basis_[r].scaled(c);
  }
  return d.is_zero();
}

FpVector AffineSubspace::coordinates(const FpVector& x) const {
  if (!contains(x)) throw std::invalid_argument("coordinates: point outside subspace");
  FpVector d = x - offset_;
  std::vector<std::uint32_t> y(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) y[r] = d[pivots_[r]];
  return FpVector(p(), std::move(y));
}

std::pair<std::vector<FpVector>, std::vector<std::uint32_t>> AffineSubspace::equations() const {
  auto rows = nullspace(basis_, p(), n());
  std::vector<std::uint32_t> rhs;
  for (const auto& a : rows) rhs.push_back(a.dot(offset_));
  return {std::move(rows), std::move(rhs)};
}

std::uint64_t AffineSubspace::size() const { return ipow(p(), dim()); }

std::vector<FpVector> AffineSubspace::points() const {
  auto param = parametrize(*this);
  std::vector<FpVector> out;
  const auto count = size();
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(param(FpVector::from_index(p(), dim(), i)));
  return out;
}

namespace {

std::string digits(const FpVector& v) {
  std::string s;
  for (unsigned i = 0; i < v.n(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

FpVector parse_vector(const std::string& s, std::uint32_t p, unsigned n) {
  std::istringstream is(s);
  std::vector<std::uint32_t> e;
  long v;
  while (is >> v) {
    if (v < 0 || v >= static_cast<long>(p)) throw std::invalid_argument("subspace text: entry out of range");
    e.push_back(static_cast<std::uint32_t>(v));
  }
  if (e.size() != n) throw std::invalid_argument("subspace text: wrong vector length");
  return FpVector(p, std::move(e));
}

}  // namespace

std::string AffineSubspace::to_text() const {
  std::string s = std::to_string(p()) + " " + std::to_string(n()) + " " + std::to_string(dim());
  for (const auto& b : basis_) s += " ; " + digits(b);
  s += " ; " + digits(offset_);
  return s;
}

AffineSubspace AffineSubspace::parse(const std::string& text) {
  auto parts = split(text, ';');
  if (parts.empty()) throw std::invalid_argument("subspace text: empty");
  std::istringstream head(parts[0]);
  long p = 0, n = -1, dim = -1;
  if (!(head >> p >> n >> dim) || n < 0 || dim < 0 || dim > n)
    throw std::invalid_argument("subspace text: bad header");
  require_prime(static_cast<std::uint32_t>(p));
  if (parts.size() != static_cast<std::size_t>(dim) + 2) throw std::invalid_argument("subspace text: wrong row count");
  std::vector<FpVector> basis;
  for (long i = 0; i < dim; ++i)
    basis.push_back(parse_vector(parts[1 + i], static_cast<std::uint32_t>(p), static_cast<unsigned>(n)));
  auto off = parse_vector(parts.back(), static_cast<std::uint32_t>(p), static_cast<unsigned>(n));
  AffineSubspace h(off, basis);
  if (h.dim() != static_cast<unsigned>(dim)) throw std::invalid_argument("subspace text: dependent basis rows");
  return h;
}

AffineMap parametrize(const AffineSubspace& h) {
  return AffineMap(h.p(), h.dim(), h.n(), h.basis(), h.offset());
}

bool membership(const AffineSubspace& h, const FpVector& x) { return h.contains(x); }

std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.p() != b.p() || a.n() != b.n()) throw std::invalid_argument("intersect: ambient mismatch");
  auto [ra, ba] = a.equations();
  auto [rb, bb] = b.equations();
  ra.insert(ra.end(), rb.begin(), rb.end());
  ba.insert(ba.end(), bb.begin(), bb.end());
  return AffineSubspace::from_equations(ra, ba, a.p(), a.n());
}

AffineFunctional separating_functional(const AffineSubspace& h, const FpVector& x0) {
  if (h.contains(x0)) throw std::invalid_argument("separating_functional: point lies in the subspace");
  const auto p = h.p();
  const auto n = h.n();
  const auto count = ipow(p, n);
  if (count > (std::uint64_t{1} << 24)) throw BudgetExceeded("separating_functional: p^n above 2^24");
  const FpVector d = x0 - h.offset();
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    auto a = FpVector::from_index(p, n, idx);
    bool orth = true;
    for (const auto& b : h.basis()) orth = orth && a.dot(b) == 0;
    if (!orth) continue;
    auto s = a.dot(d);
    if (s == 0) continue;
    auto scaled = a.scaled(FpScalar(p, s).inverse().value());
    return AffineFunctional{scaled, (p - scaled.dot(h.offset())) % p};
  }
  throw std::logic_error("separating_functional: no functional found");
}

PigeonholeResult pigeonhole_subspace(const std::vector<AffineSubspace>& hs, bool enforce_bound) {
  if (hs.empty()) throw std::invalid_argument("pigeonhole_subspace: need at least one subspace");
  const auto p = hs[0].p();
  const auto n = hs[0].n();
  for (const auto& h : hs)
    if (h.p() != p || h.n() != n) throw std::invalid_argument("pigeonhole_subspace: ambient mismatch");
  const auto r = static_cast<unsigned>(hs.size());
  if (enforce_bound && 2 * r > n) throw std::invalid_argument("pigeonhole_subspace: requires r <= n/2");
  if (ipow(p, n) > (std::uint64_t{1} << 24)) throw BudgetExceeded("pigeonhole_subspace: p^n above 2^24");

  std::vector<kernels::EquationSet> eqs;
  for (const auto& h : hs) {
    auto [rows, rhs] = h.equations();
    kernels::EquationSet e;
    for (const auto& row : rows) e.rows.emplace_back(row.entries().begin(), row.entries().end());
    e.rhs = rhs;
    eqs.push_back(std::move(e));
  }
  auto counts = kernels::parallel::pattern_counts(p, n, eqs);
  std::uint64_t best_key = 0;
  kernels::PatternTally best{};
  for (const auto& [key, tally] : counts) {
    if (tally.count > best.count) {
      best_key = key;
      best = tally;
    }
  }

  std::vector<bool> pattern(r);
  std::vector<unsigned> members;
  for (unsigned i = 0; i < r; ++i) {
    pattern[i] = (best_key >> (r - 1 - i)) & 1u;
    if (pattern[i]) members.push_back(i);
  }
  const auto x0 = FpVector::from_index(p, n, best.first_index);

  std::vector<FpVector> rows;
  std::vector<std::uint32_t> rhs;
  for (auto i : members) {
    auto [ra, ba] = hs[i].equations();
    rows.insert(rows.end(), ra.begin(), ra.end());
    rhs.insert(rhs.end(), ba.begin(), ba.end());
  }
  std::vector<AffineFunctional> separators;
  for (unsigned i = 0; i < r; ++i) {
    if (pattern[i]) continue;
    auto h = separating_functional(hs[i], x0);
    rows.push_back(h.a);
    rhs.push_back((1 + p - h.b) % p);
    separators.push_back(std::move(h));
  }
  auto u = AffineSubspace::from_equations(rows, rhs, p, n);
  if (!u) throw std::logic_error("pigeonhole_subspace: witness point not in constructed subspace");
  return PigeonholeResult{*u, members, pattern, best.count, x0, std::move(separators)};
}

}  // namespace magicrank
