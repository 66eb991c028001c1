#include "magicrank/suites.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "magicrank/chevalley.hpp"
#include "magicrank/fourier.hpp"
#include "magicrank/pipeline.hpp"
#include "magicrank/rank.hpp"

namespace magicrank {

void SuiteResult::record(bool good, const std::string& what) {
  ++total;
  if (good)
    ++passed;
  else if (failures.size() < 10)
    failures.push_back(what);
}

namespace {

template <class F>
SuiteResult timed(const std::string& name, F&& body) {
  SuiteResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

PhaseTable random_phases(std::uint32_t p, unsigned n, unsigned m, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> e(0, m - 1);
  std::vector<CycloNumber> v;
  for (std::uint64_t i = 0; i < ipow(p, n); ++i) v.push_back(CycloNumber::root(m, e(rng)));
  return PhaseTable(p, n, m, std::move(v));
}

struct BridgeSample {
  NonclassicalPoly P;
  unsigned rank;
  unsigned frank;
  unsigned sparsity;
};

// Every zero-shift quadratic on F_2^n for n <= 3, then random ones with random shifts.
const std::vector<BridgeSample>& bridge_samples(std::uint64_t seed, unsigned random_count) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, std::vector<BridgeSample>> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace({seed, random_count});
  if (!fresh) return it->second;

  std::vector<NonclassicalPoly> polys;
  for (unsigned n = 1; n <= 3; ++n) {
    PolynomialFamily fam(2, n, 2);
    for (std::uint64_t i = 0; i < fam.size(); ++i) polys.push_back(fam.member(i));
  }
  std::mt19937_64 rng(seed);
  for (unsigned k = 0; k < random_count; ++k) {
    const unsigned n = std::uniform_int_distribution<unsigned>(1, 3)(rng);
    PolynomialFamily fam(2, n, 2);
    auto q = fam.member(std::uniform_int_distribution<std::uint64_t>(0, fam.size() - 1)(rng));
    const auto shift = std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
    polys.emplace_back(2, n, TorusValue(2, shift, 1), q.terms());
  }
  for (auto& P : polys) {
    const auto f = PhaseTable::of(P, 8);
    const auto fr = frank_exact(f, 2, static_cast<unsigned>(f.size()));
    if (!fr.rank) throw std::logic_error("frank search exhausted below the trivial bound");
    it->second.push_back(BridgeSample{P, exact_rank2(P).rank, *fr.rank, fourier_sparsity(f)});
  }
  return it->second;
}

}  // namespace

SuiteResult identities_suite() {
  return timed("identities", [](SuiteResult& r) {
    for (std::uint32_t a = 0; a < 2; ++a)
      for (std::uint32_t b = 0; b < 2; ++b) {
        auto s = lift_identity_f2(FpScalar(2, a), FpScalar(2, b));
        r.record(s.lhs == s.rhs, "F_2 identity at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    for (std::uint32_t a = 0; a < 3; ++a)
      for (std::uint32_t b = 0; b < 3; ++b) {
        auto s = lift_identity_f3(FpScalar(3, a), FpScalar(3, b));
        r.record(s.lhs == s.rhs, "F_3 identity at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  });
}

SuiteResult parseval_suite(std::uint64_t seed, unsigned per_case) {
  return timed("parseval", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    for (std::uint32_t p : {2u, 3u})
      for (unsigned n = 1; n <= 3; ++n) {
        const unsigned m = default_root_order(p);
        for (unsigned k = 0; k < per_case; ++k) {
          auto f = random_phases(p, n, m, rng);
          auto g = random_phases(p, n, m, rng);
          bool ok = inner_product(f, g) == dual_inner_product(fourier_transform(f), fourier_transform(g));
          r.record(ok, "p=" + std::to_string(p) + " n=" + std::to_string(n) + " sample " + std::to_string(k));
        }
      }
  });
}

SuiteResult lovett_suite(std::uint64_t seed, unsigned pairs) {
  return timed("lovett", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> val(0, 7);
    for (unsigned k = 0; k < pairs; ++k) {
      const unsigned n = std::uniform_int_distribution<unsigned>(1, 3)(rng);
      std::vector<TorusValue> a, b;
      for (std::uint64_t x = 0; x < ipow(2, n); ++x) {
        a.emplace_back(2, val(rng), 2);
        b.emplace_back(2, val(rng), 2);
      }
      auto rep = lovett_check(FunctionTable(2, n, a), FunctionTable(2, n, b), 8);
      r.record(rep.holds, "pair " + std::to_string(k) + " (n=" + std::to_string(n) + ")");
    }
  });
}

SuiteResult fourier_support_suite(unsigned max_n) {
  return timed("fourier-support", [&](SuiteResult& r) {
    for (unsigned n = 1; n <= max_n; ++n)
      for (std::uint64_t hi = 0; hi < ipow(2, n); ++hi) {
        const auto h = FpVector::from_index(2, n, hi);
        std::vector<TorusValue> vals;
        for (std::uint64_t x = 0; x < ipow(2, n); ++x)
          vals.emplace_back(2, static_cast<std::int64_t>(nat_lift(FpVector::from_index(2, n, x).hadamard(h))), 1);
        const auto hat = fourier_transform(PhaseTable::of(FunctionTable(2, n, vals), 8));
        const mpq_class expect(1, static_cast<unsigned long>(ipow(2, static_cast<unsigned>(nat_lift(h)))));
        bool ok = true;
        for (std::uint64_t ai = 0; ai < hat.size() && ok; ++ai) {
          const auto a = FpVector::from_index(2, n, ai);
          bool inside = true;
          for (unsigned i = 0; i < n; ++i) inside = inside && (h[i] != 0 || a[i] == 0);
          const auto& z = hat.at(ai);
          ok = inside ? z.abs2() == CycloNumber::rational(8, expect) : z.is_zero();
        }
        r.record(ok, "h=" + h.to_string());
      }
  });
}

SuiteResult claim_suite(std::uint64_t seed, unsigned instances) {
  return timed("claim", [&](SuiteResult& r) {
    auto c = claim_random_check(instances, seed);
    r.total = c.instances;
    r.passed = c.passed;
    for (auto& f : c.failures)
      if (r.failures.size() < 10) r.failures.push_back(f);
  });
}

SuiteResult chevalley_suite(std::uint64_t seed, unsigned tuples) {
  return timed("chevalley", [&](SuiteResult& r) {
    auto nor = nor_rank_theorem_check(4, 3, 1, seed);
    r.record(nor.exhaustive && nor.holds(),
             "n=4 d=3 r=1: " + std::to_string(nor.tuples_with_second_root) + "/" +
                 std::to_string(nor.tuples_checked) + " quadratics have a second root");
    auto cw = chevalley_random_check(tuples, seed);
    r.total += cw.tuples;
    r.passed += cw.consistent;
    for (auto& f : cw.failures)
      if (r.failures.size() < 10) r.failures.push_back(f);
  });
}

SuiteResult bridge_suite(std::uint64_t seed, unsigned random_count) {
  return timed("bridges", [&](SuiteResult& r) {
    for (const auto& s : bridge_samples(seed, random_count)) {
      const bool ok = s.rank <= s.frank && s.frank <= ipow(4, s.rank) && s.frank == s.sparsity;
      r.record(ok, s.P.to_text() + ": rank " + std::to_string(s.rank) + ", frank " + std::to_string(s.frank) +
                       ", sparsity " + std::to_string(s.sparsity));
    }
  });
}

SuiteResult sanyal_suite(std::uint64_t seed, unsigned random_count) {
  return timed("sanyal", [&](SuiteResult& r) {
    for (const auto& s : bridge_samples(seed, random_count))
      r.record(s.frank >= s.rank * s.rank,
               s.P.to_text() + ": frank " + std::to_string(s.frank) + " < rank^2 = " + std::to_string(s.rank * s.rank));
  });
}

std::vector<std::string> suite_names() {
  return {"identities", "parseval", "lovett", "fourier-support", "claim", "chevalley", "bridges", "sanyal"};
}

std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  auto want = [&](const char* s) { return name == "all" || name == s; };
  if (want("identities")) out.push_back(identities_suite());
  if (want("parseval")) out.push_back(parseval_suite(seed));
  if (want("lovett")) out.push_back(lovett_suite(seed));
  if (want("fourier-support")) out.push_back(fourier_support_suite());
  if (want("claim")) out.push_back(claim_suite(seed));
  if (want("chevalley")) out.push_back(chevalley_suite(seed));
  if (want("bridges")) out.push_back(bridge_suite(seed));
  if (want("sanyal")) out.push_back(sanyal_suite(seed));
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace magicrank
