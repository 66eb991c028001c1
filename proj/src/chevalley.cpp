#include "magicrank/chevalley.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "magicrank/errors.hpp"

namespace magicrank {

NonclassicalPoly nor_poly(unsigned n) {
  // prod (1 + x_t) expands to the sum of all square-free monomials.
  std::map<std::vector<std::uint8_t>, std::uint32_t> terms;
  for (std::uint64_t s = 1; s < ipow(2, n); ++s) {
    std::vector<std::uint8_t> e(n);
    for (unsigned t = 0; t < n; ++t) e[t] = (s >> (n - 1 - t)) & 1;
    terms.emplace(std::move(e), 1);
  }
  return NonclassicalPoly::classical(2, n, terms, 1);
}

NonclassicalPoly and_poly(unsigned n) {
  if (n == 0) return NonclassicalPoly::classical(2, 0, {}, 1);
  return NonclassicalPoly::classical(2, n, {{std::vector<std::uint8_t>(n, 1), 1}}, 0);
}

ChevalleyWarningReport chevalley_warning_check(const std::vector<NonclassicalPoly>& qs) {
  if (qs.empty()) throw std::invalid_argument("chevalley_warning_check: no polynomials");
  ChevalleyWarningReport rep;
  rep.p = qs[0].p();
  rep.n = qs[0].n();
  if (ipow(rep.p, rep.n) > (std::uint64_t{1} << 24)) throw BudgetExceeded("chevalley_warning_check: p^n > 2^24");
  std::vector<FunctionTable> tables;
  for (const auto& q : qs) {
    if (q.p() != rep.p || q.n() != rep.n) throw std::invalid_argument("chevalley_warning_check: mixed shapes");
    if (!q.is_classical()) throw std::invalid_argument("chevalley_warning_check: polynomials must be classical");
    rep.degree_sum += q.representation_degree();
    tables.push_back(q.table());
  }
  const auto points = tables[0].size();
  rep.vanish_at_origin = true;
  for (const auto& t : tables) rep.vanish_at_origin = rep.vanish_at_origin && t.at(0).is_zero();
  for (std::uint64_t x = 0; x < points; ++x) {
    bool root = true;
    for (const auto& t : tables) root = root && t.at(x).is_zero();
    if (!root) continue;
    ++rep.root_count;
    if (x != 0 && !rep.second_root) rep.second_root = FpVector::from_index(rep.p, rep.n, x);
  }
  rep.degree_condition = rep.degree_sum < rep.n;
  rep.divisible = rep.root_count % rep.p == 0;
  return rep;
}

namespace {

// Index of the first nonzero common root of the candidates, or 0 if none.
std::uint64_t second_root(const std::vector<std::vector<std::uint32_t>>& exps) {
  for (std::uint64_t x = 1; x < exps[0].size(); ++x) {
    bool root = true;
    for (const auto& e : exps) root = root && e[x] == 0;
    if (root) return x;
  }
  return 0;
}

}  // namespace

NorTheoremReport nor_rank_theorem_check(unsigned n, unsigned d, unsigned r, std::uint64_t seed,
                                        std::uint64_t samples) {
  if (d < 2 || r == 0 || n == 0) throw std::invalid_argument("nor_rank_theorem_check: need n, r >= 1 and d >= 2");
  if (n > 20) throw BudgetExceeded("nor_rank_theorem_check: n > 20");
  NorTheoremReport rep;
  rep.n = n;
  rep.d = d;
  rep.r = r;
  rep.seed = seed;
  rep.hypothesis = r * (d - 1) < n;

  const auto nor = nor_poly(n).table();
  rep.nor_separates = true;
  for (std::uint64_t x = 0; x < nor.size(); ++x)
    rep.nor_separates = rep.nor_separates && (nor.at(x) == (x == 0 ? TorusValue(2, 1, 0) : TorusValue(2)));

  PolynomialFamily family(2, n, d - 1, 0);
  family.prepare(2);
  rep.family_size = family.size();
  std::uint64_t tuples = 1;
  bool small = true;
  for (unsigned i = 0; i < r && small; ++i) {
    if (tuples > kNorTupleBudget / rep.family_size) small = false;
    tuples *= rep.family_size;
  }
  rep.exhaustive = small && tuples * ipow(2, n) <= (std::uint64_t{1} << 28);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, rep.family_size - 1);
  const auto total = rep.exhaustive ? tuples : samples;
  std::vector<std::vector<std::uint32_t>> exps(r);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<std::uint64_t> idx(r);
    auto rest = k;
    for (unsigned i = 0; i < r; ++i) {
      if (rep.exhaustive) {
        idx[i] = rest % rep.family_size;
        rest /= rep.family_size;
      } else {
        idx[i] = pick(rng);
      }
      family.exponents(idx[i], 2, exps[i]);
    }
    ++rep.tuples_checked;
    if (second_root(exps) != 0) {
      ++rep.tuples_with_second_root;
    } else if (!rep.counterexample) {
      std::vector<NonclassicalPoly> ce;
      for (auto i : idx) ce.push_back(family.member(i));
      rep.counterexample = std::move(ce);
    }
  }
  return rep;
}

ChevalleySuite chevalley_random_check(std::uint64_t tuples, std::uint64_t seed, unsigned max_n) {
  if (max_n < 2) throw std::invalid_argument("chevalley_random_check: max_n must be at least 2");
  std::mt19937_64 rng(seed);
  ChevalleySuite out;
  for (std::uint64_t k = 0; k < tuples; ++k) {
    const std::uint32_t p = std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 2;
    const unsigned n = std::uniform_int_distribution<unsigned>(2, max_n)(rng);
    // Split a degree budget below n into positive parts.
    unsigned budget = std::uniform_int_distribution<unsigned>(1, n - 1)(rng);
    std::vector<NonclassicalPoly> qs;
    while (budget > 0) {
      const unsigned deg = std::uniform_int_distribution<unsigned>(1, budget)(rng);
      budget -= deg;
      std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
      std::map<Monomial, std::uint32_t> terms;
      const PolynomialFamily family(p, n, deg, 0);
      for (const auto& mono : family.monomials()) terms.emplace(mono, coeff(rng));
      qs.emplace_back(p, n, TorusValue(p, coeff(rng), 0), std::move(terms));
    }
    const auto rep = chevalley_warning_check(qs);
    ++out.tuples;
    if (rep.consistent())
      ++out.consistent;
    else
      out.failures.push_back("tuple " + std::to_string(k) + " (p=" + std::to_string(p) + ", n=" +
                             std::to_string(n) + "): " + std::to_string(rep.root_count) + " common roots");
  }
  return out;
}

}  // namespace magicrank
