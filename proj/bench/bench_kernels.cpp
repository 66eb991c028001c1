// Serial reference vs OpenMP kernels on the workloads the library actually runs.

#include <benchmark/benchmark.h>

#include <random>

#include "magicrank/fourier.hpp"
#include "magicrank/kernels.hpp"
#include "magicrank/stabilizer.hpp"

using namespace magicrank;
namespace k = magicrank::kernels;

namespace {

std::vector<k::EquationSet> random_equations(std::uint32_t p, unsigned n, unsigned r) {
  std::mt19937_64 rng(1);
  std::vector<k::EquationSet> out(r);
  for (auto& s : out)
    for (unsigned e = 0; e < 2; ++e) {
      std::vector<std::uint32_t> row(n);
      for (auto& v : row) v = rng() % p;
      s.rows.push_back(row);
      s.rhs.push_back(rng() % p);
    }
  return out;
}

template <bool Parallel>
void BM_PatternCounts(benchmark::State& st) {
  auto subs = random_equations(3, static_cast<unsigned>(st.range(0)), 4);
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(k::parallel::pattern_counts(3, st.range(0), subs));
    else
      benchmark::DoNotOptimize(k::serial::pattern_counts(3, st.range(0), subs));
  }
}

template <bool Parallel>
void BM_FourierTransform(benchmark::State& st) {
  unsigned n = static_cast<unsigned>(st.range(0));
  auto f = PhaseTable::of(magic_polynomial(2, n), 8).values();
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(k::parallel::fourier_transform(f, 2, n));
    else
      benchmark::DoNotOptimize(k::serial::fourier_transform(f, 2, n));
  }
}

template <bool Parallel>
void BM_CorrelationScan(benchmark::State& st) {
  unsigned n = static_cast<unsigned>(st.range(0));
  PolynomialFamily fam(2, n, 2);
  fam.prepare(8);
  auto target = phase_exponents(magic_polynomial(2, n).table(), 8);
  k::CandidateSource src{fam.size(), [&](std::uint64_t i, std::vector<std::uint32_t>& e) { fam.exponents(i, 8, e); }};
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(k::parallel::correlation_scan(target, 2, n, 8, src));
    else
      benchmark::DoNotOptimize(k::serial::correlation_scan(target, 2, n, 8, src));
  }
}

template <bool Parallel>
void BM_MaxNonvanishingOrder(benchmark::State& st) {
  unsigned n = static_cast<unsigned>(st.range(0));
  auto t = NonclassicalPoly::weight(2, n, 2).table();
  std::vector<std::uint64_t> nums;
  for (const auto& v : t.values()) nums.push_back(v.numerator_at(2));
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(k::parallel::max_nonvanishing_order(nums, 8, 2, n, 4));
    else
      benchmark::DoNotOptimize(k::serial::max_nonvanishing_order(nums, 8, 2, n, 4));
  }
}

template <bool Parallel>
void BM_SubsetSpanSearch(benchmark::State& st) {
  // the r = 2 step of the two-qubit magic-state search
  auto cat = enumerate_stabilizers(2, 2);
  std::vector<k::Column> dict;
  for (const auto& e : cat.entries) dict.push_back({e.vector.amplitudes, e.vector.support()});
  auto target = magic_state(2, 2).amplitudes;
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(k::parallel::subset_span_search(dict, target, 2));
    else
      benchmark::DoNotOptimize(k::serial::subset_span_search(dict, target, 2));
  }
}

}  // namespace

BENCHMARK(BM_PatternCounts<false>)->Arg(8)->Arg(10);
BENCHMARK(BM_PatternCounts<true>)->Arg(8)->Arg(10);
BENCHMARK(BM_FourierTransform<false>)->Arg(4)->Arg(6);
BENCHMARK(BM_FourierTransform<true>)->Arg(4)->Arg(6);
BENCHMARK(BM_CorrelationScan<false>)->Arg(2)->Arg(3);
BENCHMARK(BM_CorrelationScan<true>)->Arg(2)->Arg(3);
BENCHMARK(BM_MaxNonvanishingOrder<false>)->Arg(3)->Arg(4);
BENCHMARK(BM_MaxNonvanishingOrder<true>)->Arg(3)->Arg(4);
BENCHMARK(BM_SubsetSpanSearch<false>);
BENCHMARK(BM_SubsetSpanSearch<true>);

BENCHMARK_MAIN();
