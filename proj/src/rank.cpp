#include "magicrank/rank.hpp"

#include <algorithm>
#include <stdexcept>

#include "magicrank/errors.hpp"
#include "magicrank/kernels.hpp"

namespace magicrank {

namespace {

// sum_{r=lo..hi} C(N, r), saturating at cap + 1.
std::uint64_t binomial_sum(std::uint64_t N, unsigned lo, unsigned hi, std::uint64_t cap) {
  std::uint64_t total = 0;
  for (unsigned r = lo; r <= hi && r <= N; ++r) {
    long double c = 1;
    for (unsigned i = 0; i < r; ++i) c = c * static_cast<long double>(N - i) / (i + 1);
    if (c > static_cast<long double>(cap)) return cap + 1;
    total += static_cast<std::uint64_t>(c + 0.5L);
    if (total > cap) return cap + 1;
  }
  return total;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t N) {
  const std::size_t r = c.size();
  std::size_t i = r;
  while (i > 0 && c[i - 1] == N - r + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

Rank2Result exact_rank2(const NonclassicalPoly& P) {
  if (P.representation_degree() > 2) throw std::invalid_argument("exact_rank2: P must have degree at most 2");
  const auto p = P.p();
  const auto n = P.n();
  const auto table = P.table();
  const auto points = table.size();

  Rank2Result res;
  if (std::all_of(table.values().begin(), table.values().end(),
                  [&](const TorusValue& t) { return t == table.at(0); })) {
    res.gamma = {table.at(0)};
    return res;
  }

  std::vector<FpVector> funcs;
  for (std::uint64_t i = 1; i < points; ++i) {
    auto v = FpVector::from_index(p, n, i);
    unsigned k = 0;
    while (v[k] == 0) ++k;
    if (v[k] == 1) funcs.push_back(std::move(v));
  }
  const auto N = funcs.size();
  if (binomial_sum(N, 1, n, kRank2Budget / points) > kRank2Budget / points)
    throw BudgetExceeded("exact_rank2: level-set search for p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                         " exceeds the budget");

  std::vector<std::vector<std::uint32_t>> vals(N, std::vector<std::uint32_t>(points));
  for (std::size_t f = 0; f < N; ++f)
    for (std::uint64_t x = 0; x < points; ++x) vals[f][x] = funcs[f].dot(FpVector::from_index(p, n, x));

  for (unsigned r = 1; r <= n; ++r) {
    std::vector<std::size_t> c(r);
    for (unsigned i = 0; i < r; ++i) c[i] = i;
    const auto keys = ipow(p, r);
    do {
      ++res.subsets_tested;
      std::vector<std::optional<TorusValue>> gamma(keys);
      bool ok = true;
      for (std::uint64_t x = 0; x < points && ok; ++x) {
        std::uint64_t key = 0;
        for (auto f : c) key = key * p + vals[f][x];
        auto& slot = gamma[key];
        if (!slot)
          slot = table.at(x);
        else
          ok = (*slot == table.at(x));
      }
      if (ok) {
        res.rank = r;
        for (auto f : c) res.functionals.push_back(funcs[f]);
        res.gamma = std::move(gamma);
        return res;
      }
    } while (next_combination(c, N));
  }
  throw std::logic_error("exact_rank2: no factorization through n functionals");
}

unsigned correlation_exponent(std::uint32_t p, unsigned d) {
  if (d == 0) throw std::invalid_argument("correlation_exponent: d must be positive");
  return 1 + (d - 1 + p - 2) / (p - 1);
}

mpq_class correlation_threshold_sq(std::uint32_t p, unsigned d, unsigned r) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), p, 2UL * correlation_exponent(p, d) * r);
  return mpq_class(mpz_class(1), den);
}

CorrelationBound rank_lb_by_correlation(const NonclassicalPoly& P, unsigned d, unsigned r, unsigned prec) {
  if (d < 2) throw std::invalid_argument("rank_lb_by_correlation: d must be at least 2");
  auto scan = correlation_scan(P, d - 1, prec);
  auto thr = correlation_threshold_sq(P.p(), d, r);
  const bool proven = compare_real(scan.max_corr_sq.exact, thr, prec) < 0;
  return CorrelationBound{d, r, thr, std::move(scan), proven};
}

unsigned rank_lower_bound_from_correlation(std::uint32_t p, unsigned d, const CycloNumber& max_corr_sq,
                                           unsigned prec) {
  if (certified_sign(max_corr_sq, prec) <= 0)
    throw std::invalid_argument("rank_lower_bound_from_correlation: correlation must be positive");
  for (unsigned r = 0;; ++r)
    if (compare_real(max_corr_sq, correlation_threshold_sq(p, d, r), prec) >= 0) return r;
}

FrankResult frank_exact(const PhaseTable& f, unsigned d, unsigned r_max) {
  if (d < 2) throw std::invalid_argument("frank_exact: d must be at least 2");
  const auto p = f.p();
  const auto n = f.n();
  const auto m = f.m();
  PolynomialFamily family(p, n, d - 1);
  unsigned level = 0;
  for (const auto& mono : family.monomials()) level = std::max(level, mono.level);
  if (m % ipow(p, level + 1) != 0)
    throw std::invalid_argument("frank_exact: the dictionary phases need a root order divisible by " +
                                std::to_string(ipow(p, level + 1)));
  const auto N = family.size();
  if (N > (std::uint64_t{1} << 16) || binomial_sum(N, 1, r_max, kSubsetBudget) > kSubsetBudget)
    throw BudgetExceeded("frank_exact: dictionary of " + std::to_string(N) + " phases up to r=" +
                         std::to_string(r_max) + " exceeds the subset budget");

  FrankResult res;
  res.dictionary_size = N;
  const auto& target = f.values();
  if (std::all_of(target.begin(), target.end(), [](const CycloNumber& z) { return z.is_zero(); })) {
    res.rank = 0;
    return res;
  }

  family.prepare(m);
  std::vector<kernels::Column> dict;
  dict.reserve(N);
  std::vector<std::uint32_t> exps;
  for (std::uint64_t q = 0; q < N; ++q) {
    family.exponents(q, m, exps);
    kernels::Column col{{}, std::vector<bool>(exps.size(), true)};
    col.entries.reserve(exps.size());
    for (auto e : exps) col.entries.push_back(CycloNumber::root(m, e));
    dict.push_back(std::move(col));
  }

  for (unsigned r = 1; r <= r_max; ++r) {
    auto s = kernels::parallel::subset_span_search(dict, target, r);
    res.tested_per_r.push_back(s.subsets_tested);
    if (s.hit) {
      res.rank = r;
      for (auto i : s.hit->indices) res.components.push_back(family.member(i));
      res.coefficients = std::move(s.hit->coefficients);
      break;
    }
  }
  return res;
}

unsigned fourier_sparsity(const PhaseTable& f) {
  const auto hat = fourier_transform(f);
  return static_cast<unsigned>(
      std::count_if(hat.values().begin(), hat.values().end(), [](const CycloNumber& z) { return !z.is_zero(); }));
}

StabRankResult stab_rank_exact(const StateVector& v, const StabilizerCatalog& catalog, unsigned r_max) {
  if (v.p != catalog.p || v.n != catalog.n || v.m != catalog.m)
    throw std::invalid_argument("stab_rank_exact: catalog does not match the state's (p, n, m)");
  if (binomial_sum(catalog.size(), 1, r_max, kSubsetBudget) > kSubsetBudget)
    throw BudgetExceeded("stab_rank_exact: up to r=" + std::to_string(r_max) + " over " +
                         std::to_string(catalog.size()) + " states exceeds the subset budget");
  std::vector<kernels::Column> dict;
  dict.reserve(catalog.size());
  for (const auto& e : catalog.entries) dict.push_back(kernels::Column{e.vector.amplitudes, e.vector.support()});

  StabRankResult res;
  if (std::all_of(v.amplitudes.begin(), v.amplitudes.end(), [](const CycloNumber& z) { return z.is_zero(); })) {
    res.chi = 0;
    return res;
  }
  for (unsigned r = 1; r <= r_max; ++r) {
    auto s = kernels::parallel::subset_span_search(dict, v.amplitudes, r);
    res.tested_per_r.push_back(s.subsets_tested);
    res.pruned_per_r.push_back(s.subsets_pruned);
    if (s.hit) {
      res.chi = r;
      res.indices = s.hit->indices;
      for (auto i : res.indices) res.states.push_back(catalog.entries[i].state);
      res.coefficients = std::move(s.hit->coefficients);
      break;
    }
  }
  return res;
}

RestrictionReport restriction_rank_check(const NonclassicalPoly& P, const AffineSubspace& U) {
  if (U.p() != P.p() || U.n() != P.n()) throw std::invalid_argument("restriction_rank_check: shape mismatch");
  RestrictionReport rep;
  rep.rank = exact_rank2(P).rank;
  rep.codim = U.codim();
  const auto restricted = interpolate(restrict(P, parametrize(U)));
  rep.degree_restricted = restricted.representation_degree();
  rep.rank_restricted = exact_rank2(restricted).rank;
  rep.hypothesis = rep.rank > P.p() * rep.codim + 1;
  if (rep.hypothesis)
    rep.holds = rep.degree_restricted == 2 && rep.rank_restricted + P.p() * rep.codim >= rep.rank;
  return rep;
}

}  // namespace magicrank
