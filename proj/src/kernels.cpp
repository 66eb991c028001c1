#include "magicrank/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "magicrank/cyclo_linalg.hpp"

namespace magicrank::kernels {

void set_max_threads(unsigned threads) {
  omp_set_num_threads(threads ? static_cast<int>(threads) : omp_get_num_procs());
}

namespace {

std::vector<std::uint32_t> digits_table(std::uint32_t p, unsigned n, std::uint64_t count) {
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

std::uint64_t pattern_key(const std::uint32_t* x, std::uint32_t p, unsigned n,
                          const std::vector<EquationSet>& subspaces) {
  std::uint64_t key = 0;
  for (const auto& h : subspaces) {
    bool inside = true;
    for (std::size_t e = 0; e < h.rows.size() && inside; ++e) {
      std::uint64_t s = 0;
      for (unsigned i = 0; i < n; ++i) s += std::uint64_t{h.rows[e][i]} * x[i];
      inside = (s % p) == h.rhs[e];
    }
    key = (key << 1) | (inside ? 1u : 0u);
  }
  return key;
}

void merge_tally(PatternCounts& into, const PatternCounts& from) {
  for (const auto& [k, t] : from) {
    auto [it, fresh] = into.try_emplace(k, t);
    if (!fresh) {
      it->second.count += t.count;
      it->second.first_index = std::min(it->second.first_index, t.first_index);
    }
  }
}

void check_pattern_args(const std::vector<EquationSet>& subspaces) {
  if (subspaces.size() > 63) throw std::invalid_argument("pattern_counts supports at most 63 subspaces");
}

CycloNumber fourier_coefficient(std::span<const CycloNumber> f, const std::vector<std::uint32_t>& digits,
                                std::uint32_t p, unsigned n, std::uint64_t alpha) {
  const unsigned m = f[0].m();
  const std::uint64_t count = f.size();
  const std::uint32_t* a = &digits[alpha * n];
  CycloAccumulator acc(m);
  for (std::uint64_t x = 0; x < count; ++x) {
    const std::uint32_t* xd = &digits[x * n];
    std::uint64_t dot = 0;
    for (unsigned i = 0; i < n; ++i) dot += std::uint64_t{a[i]} * xd[i];
    acc.add_times_root(f[x], static_cast<std::int64_t>((dot % p) * (m / p)));
  }
  mpq_class scale(1, static_cast<unsigned long>(count));
  return acc.result() * scale;
}

void check_fourier_args(std::span<const CycloNumber> f, std::uint32_t p, unsigned n) {
  if (f.empty() || f.size() != ipow(p, n)) throw std::invalid_argument("fourier_transform: table size");
  if (f[0].m() % p != 0) throw std::invalid_argument("fourier_transform: p must divide the root order");
}

std::vector<std::int64_t> correlation_key(std::span<const std::uint32_t> target,
                                          const std::vector<std::uint32_t>& cand, unsigned m,
                                          const CycloContext& ctx, std::vector<std::int64_t>& hist,
                                          std::vector<std::int64_t>& auto_corr) {
  std::fill(hist.begin(), hist.end(), 0);
  for (std::size_t x = 0; x < target.size(); ++x) ++hist[(target[x] + m - cand[x] % m) % m];
  std::fill(auto_corr.begin(), auto_corr.end(), 0);
  for (unsigned k = 0; k < m; ++k) {
    if (!hist[k]) continue;
    for (unsigned l = 0; l < m; ++l)
      if (hist[l]) auto_corr[(k + m - l) % m] += hist[k] * hist[l];
  }
  std::vector<std::int64_t> key(ctx.phi, 0);
  for (unsigned d = 0; d < m; ++d) {
    if (!auto_corr[d]) continue;
    for (unsigned i = 0; i < ctx.phi; ++i) key[i] += auto_corr[d] * ctx.power[d][i];
  }
  return key;
}

void merge_values(CorrelationValues& into, const CorrelationValues& from) {
  for (const auto& [k, idx] : from) {
    auto [it, fresh] = into.try_emplace(k, idx);
    if (!fresh) it->second = std::min(it->second, idx);
  }
}

struct DerivativeScan {
  std::uint64_t modulus;
  std::uint32_t p;
  unsigned n;
  unsigned max_order;
  std::uint64_t count;
  std::vector<std::uint32_t> digits;

  std::uint64_t shifted(std::uint64_t x, std::uint64_t h) const {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < n; ++i) r = r * p + (digits[x * n + i] + digits[h * n + i]) % p;
    return r;
  }

  // Returns true when the table is identically zero.
  bool derive(const std::vector<std::uint64_t>& in, std::uint64_t h, std::vector<std::uint64_t>& out) const {
    bool zero = true;
    for (std::uint64_t x = 0; x < count; ++x) {
      out[x] = (in[shifted(x, h)] + modulus - in[x]) % modulus;
      zero = zero && out[x] == 0;
    }
    return zero;
  }

  // Highest nonvanishing order reachable below `table`, which has order `level`.
  unsigned dfs(const std::vector<std::uint64_t>& table, unsigned level) const {
    unsigned best = level;
    if (level == max_order) return best;
    std::vector<std::uint64_t> next(count);
    for (std::uint64_t h = 1; h < count; ++h) {
      if (derive(table, h, next)) continue;
      best = std::max(best, dfs(next, level + 1));
      if (best == max_order) break;
    }
    return best;
  }
};

bool is_all_zero(std::span<const std::uint64_t> t, std::uint64_t modulus) {
  return std::all_of(t.begin(), t.end(), [&](std::uint64_t v) { return v % modulus == 0; });
}

DerivativeScan make_scan(std::span<const std::uint64_t> numerators, std::uint64_t modulus, std::uint32_t p,
                         unsigned n, unsigned max_order) {
  const auto count = ipow(p, n);
  if (numerators.size() != count) throw std::invalid_argument("derivative scan: table size");
  return DerivativeScan{modulus, p, n, max_order, count, digits_table(p, n, count)};
}

bool covers(const std::vector<bool>& need, const std::vector<const Column*>& cols) {
  for (std::size_t i = 0; i < need.size(); ++i) {
    if (!need[i]) continue;
    bool hit = false;
    for (const auto* c : cols) hit = hit || c->support[i];
    if (!hit) return false;
  }
  return true;
}

// Advances comb (strictly increasing, values in [lo, hi)) to the next
// combination in lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& comb, std::size_t hi) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < hi - (k - i)) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct BranchOutcome {
  std::optional<SpanHit> hit;
  std::uint64_t tested = 0;
  std::uint64_t pruned = 0;
};

// All r-subsets whose smallest element is `first`, in lexicographic order.
BranchOutcome search_branch(const std::vector<Column>& dict, const std::vector<CycloNumber>& target,
                            const std::vector<bool>& need, unsigned r, std::size_t first) {
  BranchOutcome out;
  const std::size_t N = dict.size();
  if (first + r > N) return out;
  std::vector<std::size_t> rest(r - 1);
  for (std::size_t j = 0; j + 1 < r; ++j) rest[j] = first + 1 + j;
  std::vector<const Column*> cols(r);
  do {
    cols[0] = &dict[first];
    for (std::size_t j = 0; j + 1 < r; ++j) cols[j + 1] = &dict[rest[j]];
    if (!covers(need, cols)) {
      ++out.pruned;
      continue;
    }
    ++out.tested;
    std::vector<std::vector<CycloNumber>> mat;
    for (const auto* c : cols) mat.push_back(c->entries);
    if (auto sol = solve_in_span(mat, target)) {
      SpanHit hit;
      hit.indices.push_back(first);
      hit.indices.insert(hit.indices.end(), rest.begin(), rest.end());
      hit.coefficients = std::move(*sol);
      out.hit = std::move(hit);
      return out;
    }
  } while (r > 1 && next_combination(rest, N));
  return out;
}

std::vector<bool> support_of(const std::vector<CycloNumber>& v) {
  std::vector<bool> s(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) s[i] = !v[i].is_zero();
  return s;
}

std::optional<SubsetSearchResult> trivial_search(const std::vector<CycloNumber>& target, unsigned r) {
  if (r != 0) return std::nullopt;
  SubsetSearchResult res;
  bool zero = std::all_of(target.begin(), target.end(), [](const CycloNumber& z) { return z.is_zero(); });
  if (zero) res.hit = SpanHit{};
  return res;
}

}  // namespace

namespace serial {

PatternCounts pattern_counts(std::uint32_t p, unsigned n, const std::vector<EquationSet>& subspaces) {
  check_pattern_args(subspaces);
  const auto count = ipow(p, n);
  auto digits = digits_table(p, n, count);
  PatternCounts out;
  for (std::uint64_t x = 0; x < count; ++x) {
    auto key = pattern_key(&digits[x * n], p, n, subspaces);
    auto [it, fresh] = out.try_emplace(key, PatternTally{0, x});
    ++it->second.count;
  }
  return out;
}

std::vector<CycloNumber> fourier_transform(std::span<const CycloNumber> f, std::uint32_t p, unsigned n) {
  check_fourier_args(f, p, n);
  auto digits = digits_table(p, n, f.size());
  std::vector<CycloNumber> out;
  out.reserve(f.size());
  for (std::uint64_t a = 0; a < f.size(); ++a) out.push_back(fourier_coefficient(f, digits, p, n, a));
  return out;
}

CorrelationValues correlation_scan(std::span<const std::uint32_t> target, std::uint32_t p, unsigned n,
                                   unsigned m, const CandidateSource& candidates) {
  if (target.size() != ipow(p, n)) throw std::invalid_argument("correlation_scan: table size");
  auto ctx = CycloContext::get(m);
  std::vector<std::uint32_t> cand(target.size());
  std::vector<std::int64_t> hist(m), auto_corr(m);
  CorrelationValues out;
  for (std::uint64_t idx = 0; idx < candidates.count; ++idx) {
    candidates.fill(idx, cand);
    auto key = correlation_key(target, cand, m, *ctx, hist, auto_corr);
    out.try_emplace(std::move(key), idx);
  }
  return out;
}

unsigned max_nonvanishing_order(std::span<const std::uint64_t> numerators, std::uint64_t modulus,
                                std::uint32_t p, unsigned n, unsigned max_order) {
  auto scan = make_scan(numerators, modulus, p, n, max_order);
  if (is_all_zero(numerators, modulus)) return 0;
  std::vector<std::uint64_t> table(numerators.begin(), numerators.end());
  for (auto& v : table) v %= modulus;
  return scan.dfs(table, 0);
}

SubsetSearchResult subset_span_search(const std::vector<Column>& dictionary,
                                      const std::vector<CycloNumber>& target, unsigned r) {
  if (auto t = trivial_search(target, r)) return *t;
  auto need = support_of(target);
  SubsetSearchResult res;
  for (std::size_t first = 0; first < dictionary.size(); ++first) {
    auto b = search_branch(dictionary, target, need, r, first);
    res.subsets_tested += b.tested;
    res.subsets_pruned += b.pruned;
    if (b.hit) {
      res.hit = std::move(b.hit);
      break;
    }
  }
  return res;
}

}  // namespace serial

namespace parallel {

PatternCounts pattern_counts(std::uint32_t p, unsigned n, const std::vector<EquationSet>& subspaces) {
  check_pattern_args(subspaces);
  const auto count = ipow(p, n);
  auto digits = digits_table(p, n, count);
  PatternCounts out;
#pragma omp parallel
  {
    PatternCounts local;
#pragma omp for schedule(static)
    for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(count); ++xi) {
      auto x = static_cast<std::uint64_t>(xi);
      auto key = pattern_key(&digits[x * n], p, n, subspaces);
      auto [it, fresh] = local.try_emplace(key, PatternTally{0, x});
      ++it->second.count;
    }
#pragma omp critical(magicrank_pattern_merge)
    merge_tally(out, local);
  }
  return out;
}

std::vector<CycloNumber> fourier_transform(std::span<const CycloNumber> f, std::uint32_t p, unsigned n) {
  check_fourier_args(f, p, n);
  auto digits = digits_table(p, n, f.size());
  std::vector<CycloNumber> out(f.size(), CycloNumber::zero(f[0].m()));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(f.size()); ++a)
    out[static_cast<std::size_t>(a)] = fourier_coefficient(f, digits, p, n, static_cast<std::uint64_t>(a));
  return out;
}

CorrelationValues correlation_scan(std::span<const std::uint32_t> target, std::uint32_t p, unsigned n,
                                   unsigned m, const CandidateSource& candidates) {
  if (target.size() != ipow(p, n)) throw std::invalid_argument("correlation_scan: table size");
  auto ctx = CycloContext::get(m);
  CorrelationValues out;
#pragma omp parallel
  {
    std::vector<std::uint32_t> cand(target.size());
    std::vector<std::int64_t> hist(m), auto_corr(m);
    CorrelationValues local;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.count); ++i) {
      auto idx = static_cast<std::uint64_t>(i);
      candidates.fill(idx, cand);
      auto key = correlation_key(target, cand, m, *ctx, hist, auto_corr);
      local.try_emplace(std::move(key), idx);
    }
#pragma omp critical(magicrank_corr_merge)
    merge_values(out, local);
  }
  return out;
}

unsigned max_nonvanishing_order(std::span<const std::uint64_t> numerators, std::uint64_t modulus,
                                std::uint32_t p, unsigned n, unsigned max_order) {
  auto scan = make_scan(numerators, modulus, p, n, max_order);
  if (is_all_zero(numerators, modulus) || max_order == 0) return 0;
  std::vector<std::uint64_t> table(numerators.begin(), numerators.end());
  for (auto& v : table) v %= modulus;
  unsigned best = 0;
  std::atomic<bool> saturated{false};
#pragma omp parallel for schedule(dynamic) reduction(max : best)
  for (std::int64_t hi = 1; hi < static_cast<std::int64_t>(scan.count); ++hi) {
    if (saturated.load(std::memory_order_relaxed)) continue;
    std::vector<std::uint64_t> next(scan.count);
    if (scan.derive(table, static_cast<std::uint64_t>(hi), next)) continue;
    unsigned got = scan.dfs(next, 1);
    best = std::max(best, got);
    if (got == max_order) saturated.store(true, std::memory_order_relaxed);
  }
  return best;
}

SubsetSearchResult subset_span_search(const std::vector<Column>& dictionary,
                                      const std::vector<CycloNumber>& target, unsigned r) {
  if (auto t = trivial_search(target, r)) return *t;
  auto need = support_of(target);
  const std::size_t N = dictionary.size();
  std::vector<BranchOutcome> branches(N);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t fi = 0; fi < static_cast<std::int64_t>(N); ++fi) {
    auto first = static_cast<std::size_t>(fi);
    if (first > best.load()) continue;
    branches[first] = search_branch(dictionary, target, need, r, first);
    if (branches[first].hit) {
      auto cur = best.load();
      while (first < cur && !best.compare_exchange_weak(cur, first)) {
      }
    }
  }
  SubsetSearchResult res;
  const auto stop = best.load();
  for (std::size_t first = 0; first < N && first <= stop; ++first) {
    res.subsets_tested += branches[first].tested;
    res.subsets_pruned += branches[first].pruned;
  }
  if (stop < N) res.hit = std::move(branches[stop].hit);
  return res;
}

}  // namespace parallel

}  // namespace magicrank::kernels
