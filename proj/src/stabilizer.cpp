#include "magicrank/stabilizer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "magicrank/errors.hpp"
#include "magicrank/fourier.hpp"

namespace magicrank {

StabilizerState::StabilizerState(AffineSubspace h, NonclassicalPoly q) : H(std::move(h)), Q(std::move(q)) {
  if (Q.p() != H.p() || Q.n() != H.dim())
    throw std::invalid_argument("stabilizer state: Q must live on the local coordinates of H");
  if (Q.representation_degree() > 2) throw std::invalid_argument("stabilizer state: Q must be quadratic");
  if (H.p() == 2 && Q.depth() > 1) throw std::invalid_argument("stabilizer state: qubit form deeper than 1");
  if (H.p() != 2 && !Q.is_classical()) throw std::invalid_argument("stabilizer state: odd-p form must be classical");
}

std::vector<bool> StateVector::support() const {
  std::vector<bool> s(amplitudes.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = !amplitudes[i].is_zero();
  return s;
}

bool StateVector::operator==(const StateVector& o) const {
  return p == o.p && n == o.n && m == o.m && norm_dim == o.norm_dim && amplitudes == o.amplitudes;
}

StateVector amplitudes(const StabilizerState& s, unsigned m) {
  const auto param = parametrize(s.H);
  const auto q = s.Q.table();
  std::vector<CycloNumber> amps(ipow(s.p(), s.n()), CycloNumber::zero(m));
  for (std::uint64_t y = 0; y < q.size(); ++y)
    amps[param(FpVector::from_index(s.p(), s.H.dim(), y)).index()] = phase(q.at(y), m);
  return StateVector{s.p(), s.n(), m, std::move(amps), s.H.dim()};
}

StateVector amplitudes(const StabilizerState& s) { return amplitudes(s, default_root_order(s.p())); }

std::uint64_t stabilizer_count(std::uint32_t p, unsigned n) {
  std::uint64_t c = ipow(p, n);
  for (unsigned k = 1; k <= n; ++k) c *= ipow(p, k) + 1;
  return c;
}

namespace {

struct WorkUnit {
  AffineSubspace H;
};

void linear_subspaces(std::uint32_t p, unsigned n, unsigned k, std::vector<std::vector<FpVector>>& out) {
  // RREF bases: choose pivots, then fill entries right of each pivot on non-pivot columns.
  std::vector<unsigned> piv(k);
  for (unsigned i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned r = 0; r < k; ++r)
      for (unsigned c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
    const auto combos = ipow(p, static_cast<unsigned>(free.size()));
    for (std::uint64_t f = 0; f < combos; ++f) {
      std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(n, 0));
      for (unsigned r = 0; r < k; ++r) rows[r][piv[r]] = 1;
      auto v = f;
      for (const auto& [r, c] : free) {
        rows[r][c] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      std::vector<FpVector> basis;
      for (auto& row : rows) basis.emplace_back(p, std::move(row));
      out.push_back(std::move(basis));
    }
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && piv[i] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++piv[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<WorkUnit> affine_subspaces(std::uint32_t p, unsigned n) {
  std::vector<WorkUnit> units;
  for (unsigned k = 0; k <= n; ++k) {
    std::vector<std::vector<FpVector>> bases;
    linear_subspaces(p, n, k, bases);
    for (const auto& basis : bases) {
      std::vector<unsigned> pivots;
      for (const auto& b : basis)
        for (unsigned c = 0; c < n; ++c)
          if (b[c]) {
            pivots.push_back(c);
            break;
          }
      std::vector<unsigned> rest;
      for (unsigned c = 0; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) rest.push_back(c);
      const auto offsets = ipow(p, static_cast<unsigned>(rest.size()));
      for (std::uint64_t o = 0; o < offsets; ++o) {
        std::vector<std::uint32_t> v(n, 0);
        auto t = o;
        for (auto c : rest) {
          v[c] = static_cast<std::uint32_t>(t % p);
          t /= p;
        }
        units.push_back(WorkUnit{AffineSubspace(FpVector(p, std::move(v)), basis)});
      }
    }
  }
  return units;
}

PolynomialFamily form_family(std::uint32_t p, unsigned dim) {
  return p == 2 ? PolynomialFamily(2, dim, 2, 1) : PolynomialFamily(p, dim, 2, 0);
}

// Amplitude pattern: exponent of the root of unity, -1 off the support.
using AmpKey = std::vector<std::int32_t>;

}  // namespace

StabilizerCatalog enumerate_stabilizers(std::uint32_t p, unsigned n) {
  require_prime(p);
  if (n > 8 || stabilizer_count(p, n) > kCatalogBudget)
    throw BudgetExceeded("stabilizer catalog for p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                         " exceeds " + std::to_string(kCatalogBudget) + " states");
  const unsigned m = default_root_order(p);
  const auto units = affine_subspaces(p, n);
  const auto points = ipow(p, n);

  std::vector<std::vector<std::pair<AmpKey, std::uint64_t>>> found(units.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ui = 0; ui < static_cast<std::int64_t>(units.size()); ++ui) {
    const auto& H = units[static_cast<std::size_t>(ui)].H;
    const auto param = parametrize(H);
    const auto local = ipow(p, H.dim());
    std::vector<std::uint64_t> where(local);
    for (std::uint64_t y = 0; y < local; ++y) where[y] = param(FpVector::from_index(p, H.dim(), y)).index();
    auto family = form_family(p, H.dim());
    family.prepare(m);
    std::vector<std::uint32_t> exps;
    auto& mine = found[static_cast<std::size_t>(ui)];
    for (std::uint64_t q = 0; q < family.size(); ++q) {
      family.exponents(q, m, exps);
      AmpKey key(points, -1);
      for (std::uint64_t y = 0; y < local; ++y) key[where[y]] = static_cast<std::int32_t>(exps[y]);
      mine.emplace_back(std::move(key), q);
    }
  }

  StabilizerCatalog cat{p, n, m, {}};
  std::set<AmpKey> seen;
  for (std::size_t ui = 0; ui < units.size(); ++ui) {
    const auto family = form_family(p, units[ui].H.dim());
    for (auto& [key, q] : found[ui]) {
      if (!seen.insert(key).second) continue;
      StabilizerState s(units[ui].H, family.member(q));
      auto v = amplitudes(s, m);
      cat.entries.push_back(CatalogEntry{std::move(s), std::move(v)});
    }
  }
  if (cat.entries.size() != stabilizer_count(p, n))
    throw std::logic_error("stabilizer enumeration found " + std::to_string(cat.entries.size()) +
                           " states, expected " + std::to_string(stabilizer_count(p, n)));
  return cat;
}

StateVector magic_state(std::uint32_t p, unsigned n, const Cubic& cubic) {
  const unsigned m = default_root_order(p);
  const auto t = magic_polynomial(p, n, cubic).table();
  std::vector<CycloNumber> amps;
  amps.reserve(t.size());
  for (const auto& v : t.values()) amps.push_back(phase(v, m));
  return StateVector{p, n, m, std::move(amps), n};
}

StateVector plus_state(std::uint32_t p, unsigned n) {
  const unsigned m = default_root_order(p);
  return StateVector{p, n, m, std::vector<CycloNumber>(ipow(p, n), CycloNumber::one(m)), n};
}

bool is_stabilizer(const StateVector& v, const StabilizerCatalog& catalog) {
  if (v.p != catalog.p || v.n != catalog.n || v.m != catalog.m)
    throw std::invalid_argument("is_stabilizer: catalog does not match the state's (p, n, m)");
  const auto supp = v.support();
  auto first = std::find(supp.begin(), supp.end(), true);
  if (first == supp.end()) return false;
  const auto x0 = static_cast<std::size_t>(first - supp.begin());
  const auto& q = v.amplitudes[x0];
  if (q.root_exponent() < 0) return false;
  for (const auto& e : catalog.entries) {
    if (e.vector.norm_dim != v.norm_dim || e.vector.support() != supp) continue;
    bool match = true;
    for (std::size_t x = x0; x < supp.size() && match; ++x)
      if (supp[x]) match = (v.amplitudes[x] == q * e.vector.amplitudes[x]);
    if (match) return true;
  }
  return false;
}

}  // namespace magicrank
