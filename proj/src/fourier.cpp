#include "magicrank/fourier.hpp"

#include <stdexcept>

#include "magicrank/errors.hpp"
#include "magicrank/kernels.hpp"

namespace magicrank {

CycloNumber phase(const TorusValue& t, unsigned m) {
  const auto den = t.denominator();
  if (m % den != 0)
    throw std::invalid_argument("phase: denominator " + std::to_string(den) + " does not divide root order " +
                                std::to_string(m));
  return CycloNumber::root(m, static_cast<std::int64_t>(t.numerator() * (m / den)));
}

PhaseTable::PhaseTable(std::uint32_t p, unsigned n, unsigned m, std::vector<CycloNumber> values)
    : p_(p), n_(n), m_(m), values_(std::move(values)) {
  require_prime(p);
  if (values_.size() != ipow(p, n)) throw std::invalid_argument("phase table: wrong number of values");
  for (const auto& v : values_)
    if (v.m() != m) throw std::invalid_argument("phase table: mixed root orders");
}

PhaseTable PhaseTable::of(const FunctionTable& f, unsigned m) {
  std::vector<CycloNumber> v;
  v.reserve(f.size());
  for (const auto& t : f.values()) v.push_back(phase(t, m));
  return PhaseTable(f.p(), f.n(), m, std::move(v));
}

PhaseTable PhaseTable::of(const NonclassicalPoly& poly, unsigned m) { return of(poly.table(), m); }

PhaseTable PhaseTable::constant(std::uint32_t p, unsigned n, unsigned m, const CycloNumber& c) {
  return PhaseTable(p, n, m, std::vector<CycloNumber>(ipow(p, n), c));
}

namespace {

void check_shapes(const PhaseTable& f, const PhaseTable& g) {
  if (f.p() != g.p() || f.n() != g.n() || f.m() != g.m()) throw std::invalid_argument("phase table shape mismatch");
}

}  // namespace

PhaseTable mult_derivative(const PhaseTable& f, const FpVector& h) {
  if (h.p() != f.p() || h.n() != f.n()) throw std::invalid_argument("mult_derivative: direction shape");
  std::vector<CycloNumber> v;
  v.reserve(f.size());
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    auto x = FpVector::from_index(f.p(), f.n(), i);
    v.push_back(f.at((x + h).index()) * f.at(i).conj());
  }
  return PhaseTable(f.p(), f.n(), f.m(), std::move(v));
}

PhaseTable fourier_transform(const PhaseTable& f) {
  if (f.m() % f.p() != 0) throw std::invalid_argument("fourier_transform: p must divide the root order");
  auto v = kernels::parallel::fourier_transform(f.values(), f.p(), f.n());
  return PhaseTable(f.p(), f.n(), f.m(), std::move(v));
}

PhaseTable inverse_fourier_transform(const PhaseTable& dual) {
  // sum_alpha d(alpha) omega^-<alpha,x> = p^n * conj(E_alpha conj(d(alpha)) omega^<alpha,x>).
  std::vector<CycloNumber> conj_vals;
  conj_vals.reserve(dual.size());
  for (const auto& z : dual.values()) conj_vals.push_back(z.conj());
  auto t = kernels::parallel::fourier_transform(conj_vals, dual.p(), dual.n());
  const mpq_class scale(static_cast<unsigned long>(dual.size()));
  for (auto& z : t) z = z.conj() * scale;
  return PhaseTable(dual.p(), dual.n(), dual.m(), std::move(t));
}

CycloNumber inner_product(const PhaseTable& f, const PhaseTable& g) {
  check_shapes(f, g);
  CycloNumber acc = CycloNumber::zero(f.m());
  for (std::uint64_t i = 0; i < f.size(); ++i) acc += f.at(i) * g.at(i).conj();
  return acc * mpq_class(1, static_cast<unsigned long>(f.size()));
}

CycloNumber dual_inner_product(const PhaseTable& fhat, const PhaseTable& ghat) {
  check_shapes(fhat, ghat);
  CycloNumber acc = CycloNumber::zero(fhat.m());
  for (std::uint64_t i = 0; i < fhat.size(); ++i) acc += fhat.at(i) * ghat.at(i).conj();
  return acc;
}

RealValue certify(const CycloNumber& real_value, unsigned prec) {
  return RealValue{real_value, real_part(real_value, prec)};
}

RealValue correlation_sq(const PhaseTable& f, const PhaseTable& g, unsigned prec) {
  return certify(inner_product(f, g).abs2(), prec);
}

CycloNumber phase_inner_product(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                unsigned m) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("phase_inner_product: size mismatch");
  std::vector<std::int64_t> hist(m, 0);
  for (std::size_t x = 0; x < a.size(); ++x) ++hist[(a[x] % m + m - b[x] % m) % m];
  return CycloNumber::from_histogram(m, hist) * mpq_class(1, static_cast<unsigned long>(a.size()));
}

std::vector<std::uint32_t> phase_exponents(const FunctionTable& f, unsigned m) {
  std::vector<std::uint32_t> e;
  e.reserve(f.size());
  for (const auto& t : f.values()) {
    const auto den = t.denominator();
    if (m % den != 0) throw std::invalid_argument("phase_exponents: denominator does not divide root order");
    e.push_back(static_cast<std::uint32_t>(t.numerator() * (m / den)));
  }
  return e;
}

LovettReport lovett_check(const FunctionTable& f, const FunctionTable& g, unsigned m, unsigned prec) {
  if (f.p() != g.p() || f.n() != g.n()) throw std::invalid_argument("lovett_check: shape mismatch");
  const auto ef = phase_exponents(f, m);
  const auto eg = phase_exponents(g, m);
  const auto c2 = phase_inner_product(ef, eg, m).abs2();
  const auto lhs = c2 * c2;

  const auto count = f.size();
  std::vector<std::uint32_t> df(count), dg(count);
  CycloNumber sum = CycloNumber::zero(m);
  for (std::uint64_t h = 0; h < count; ++h) {
    const auto hv = FpVector::from_index(f.p(), f.n(), h);
    for (std::uint64_t x = 0; x < count; ++x) {
      const auto xh = (FpVector::from_index(f.p(), f.n(), x) + hv).index();
      df[x] = (ef[xh] + m - ef[x]) % m;
      dg[x] = (eg[xh] + m - eg[x]) % m;
    }
    sum += phase_inner_product(df, dg, m).abs2();
  }
  const auto rhs = sum * mpq_class(1, static_cast<unsigned long>(count));
  const bool holds = compare_real(rhs, lhs, prec) >= 0;
  return LovettReport{certify(lhs, prec), certify(rhs, prec), holds};
}

ScanResult correlation_scan(const NonclassicalPoly& target, unsigned max_degree, unsigned prec) {
  const auto p = target.p();
  const auto n = target.n();
  PolynomialFamily family(p, n, max_degree);
  const auto points = ipow(p, n);
  const auto size = family.size();
  if (size > kScanBudget / points)
    throw BudgetExceeded("correlation scan over " + std::to_string(size) + " candidates on " +
                         std::to_string(points) + " points exceeds 2^26");
  unsigned level = target.value_depth();
  for (const auto& mono : family.monomials()) level = std::max(level, mono.level);
  const auto m = static_cast<unsigned>(ipow(p, level + 1));
  family.prepare(m);

  const auto tgt = phase_exponents(target.table(), m);
  kernels::CandidateSource src{size, [&family, m](std::uint64_t idx, std::vector<std::uint32_t>& out) {
                                 family.exponents(idx, m, out);
                               }};
  const auto values = kernels::parallel::correlation_scan(tgt, p, n, m, src);

  const mpq_class scale(1, static_cast<unsigned long>(points * points));
  std::optional<CycloNumber> best;
  std::uint64_t best_idx = 0;
  for (const auto& [key, idx] : values) {
    std::vector<mpq_class> c(key.begin(), key.end());
    for (auto& q : c) q *= scale;
    auto v = CycloNumber::from_coefficients(m, std::move(c));
    if (!best) {
      best = v;
      best_idx = idx;
      continue;
    }
    int cmp = compare_real(v, *best, prec);
    if (cmp > 0 || (cmp == 0 && idx < best_idx)) {
      best = v;
      best_idx = idx;
    }
  }
  return ScanResult{certify(*best, prec), family.member(best_idx), size, values.size(), max_degree};
}

ScanResult quadratic_scan(const NonclassicalPoly& target, unsigned prec) { return correlation_scan(target, 2, prec); }

MagicBoundReport magic_correlation_bound(std::uint32_t p, unsigned n, const Cubic& cubic, unsigned prec) {
  if (n == 0) throw std::invalid_argument("magic_correlation_bound: n must be positive");
  MagicBoundReport rep{p, {}, true, true};
  for (unsigned k = 1; k <= n; ++k) {
    MagicBoundEntry e{k, quadratic_scan(magic_polynomial(p, k, cubic), prec), std::nullopt, std::nullopt};
    if (p == 2) {
      mpq_class rhs(1);
      for (unsigned i = 0; i < k; ++i) rhs *= mpq_class(3, 4);
      const auto& sq = e.scan.max_corr_sq.exact;
      e.bound_rhs = rhs;
      e.holds = compare_real(sq * sq, rhs, prec) <= 0;
      rep.holds = rep.holds && *e.holds;
    }
    if (!rep.entries.empty() &&
        compare_real(e.scan.max_corr_sq.exact, rep.entries.back().scan.max_corr_sq.exact, prec) >= 0)
      rep.strictly_decreasing = false;
    rep.entries.push_back(std::move(e));
  }
  rep.holds = rep.holds && rep.strictly_decreasing;
  return rep;
}

}  // namespace magicrank
