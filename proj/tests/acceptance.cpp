// Acceptance runner: `acceptance [criterion] [seed]` prints one line per
// criterion and exits nonzero if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "magicrank/certificate.hpp"
#include "magicrank/chevalley.hpp"
#include "magicrank/pipeline.hpp"
#include "magicrank/rank.hpp"
#include "magicrank/suites.hpp"

using namespace magicrank;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string describe(const SuiteResult& s) {
  std::ostringstream o;
  o << s.name << " " << s.passed << "/" << s.total;
  if (!s.failures.empty()) o << " first failure: " << s.failures.front();
  return o.str();
}

Verdict suite_verdict(const SuiteResult& s, double limit) {
  bool fast = s.seconds < limit;
  return {s.ok() && fast, describe(s) + (fast ? "" : " (over time limit)")};
}

Verdict c1(std::uint64_t) { return suite_verdict(identities_suite(), 1e-3); }

Verdict c2(std::uint64_t) {
  auto t0 = Clock::now();
  std::ostringstream o;
  bool ok = true;
  for (unsigned n = 1; n <= 3; ++n) {
    auto q = NonclassicalPoly::weight(2, n, 1);
    ok = ok && degree(q) == 2 && depth(q) == 1;
    for (unsigned k = 1; k <= 3; ++k) {
      unsigned d = degree(NonclassicalPoly::weight(2, n, k - 1));
      ok = ok && d == k;
      if (n == 3) o << "deg(|x|/" << (1u << k) << ")=" << d << " ";
    }
  }
  for (unsigned n = 1; n <= 2; ++n) {
    unsigned d = degree(NonclassicalPoly::weight(3, n, 1));
    ok = ok && d == 3;
    o << "deg(|x|/9,n=" << n << ")=" << d << " ";
  }
  double s = since(t0);
  o << s << "s";
  return {ok && s < 1.0, o.str()};
}

Verdict c3(std::uint64_t seed) { return suite_verdict(parseval_suite(seed), 30); }
Verdict c4(std::uint64_t seed) { return suite_verdict(lovett_suite(seed), 120); }

Verdict c5(std::uint64_t) {
  auto t0 = Clock::now();
  auto rep = magic_correlation_bound(2, 3);
  std::ostringstream o;
  for (const auto& e : rep.entries)
    o << "n=" << e.n << " max|c|^2=" << e.scan.max_corr_sq.interval.to_string(8) << " rhs=" << e.bound_rhs->get_str()
      << (*e.holds ? " ok; " : " VIOLATED; ");
  double s = since(t0);
  o << s << "s";
  return {rep.holds && s < 300, o.str()};
}

Verdict c6(std::uint64_t) { return suite_verdict(fourier_support_suite(3), 60); }

Verdict c7(std::uint64_t) {
  auto t0 = Clock::now();
  std::ostringstream o;
  bool ok = true;
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    auto cat = enumerate_stabilizers(p, n);
    ok = ok && cat.size() == stabilizer_count(p, n);
    o << "p=" << p << ",n=" << n << ":" << cat.size() << " ";
  }
  double s = since(t0);
  o << s << "s";
  return {ok && s < 600, o.str()};
}

Verdict c8(std::uint64_t) {
  auto t0 = Clock::now();
  std::ostringstream o;
  bool ok = true;
  auto one = [&](std::uint32_t p, unsigned n, std::optional<unsigned> want) {
    auto cat = load_or_enumerate(p, n);
    auto v = magic_state(p, n);
    auto r = stab_rank_exact(v, cat, 3);
    bool good = r.chi.has_value();
    std::string verified = "-";
    if (good) {
      auto out = verify_certificate(make_certificate(v, r));
      good = out.ok;
      verified = out.ok ? "verified" : "REJECTED " + out.detail;
    }
    if (want) good = good && r.chi == want;
    o << "chi(p=" << p << ",n=" << n << ")=" << (r.chi ? std::to_string(*r.chi) : "?");
    if (want) o << " expected " << *want;
    o << " r=1 subsets " << r.tested_per_r.at(0) << "+" << r.pruned_per_r.at(0) << " pruned, certificate " << verified
      << (good ? "; " : " MISMATCH; ");
    ok = ok && good;
  };
  one(2, 1, 2u);
  one(3, 1, 2u);
  one(2, 2, std::nullopt);
  double s = since(t0);
  o << s << "s";
  return {ok && s < 1800, o.str()};
}

Verdict c9(std::uint64_t seed) { return suite_verdict(claim_suite(seed, 500), 120); }

Verdict c10(std::uint64_t) {
  auto t0 = Clock::now();
  std::ostringstream o;
  bool ok = true;
  for (unsigned n = 1; n <= 2; ++n) {
    auto cat = load_or_enumerate(2, n);
    auto r = stab_rank_exact(magic_state(2, n), cat, 3);
    std::vector<DecompositionTerm> terms;
    for (std::size_t i = 0; i < r.states.size(); ++i) terms.push_back({r.coefficients[i], r.states[i]});
    auto rep = theorem1_pipeline(2, n, terms);
    // the full-space scan bounds rank_3(P) from below by at most the number of terms
    auto full = quadratic_scan(magic_polynomial(2, n));
    unsigned lb_full = rank_lower_bound_from_correlation(2, 3, full.max_corr_sq.exact);
    bool good = rep.restricted_identity && rep.chain_consistent && lb_full <= rep.r &&
                rep.rank_lower_bound <= rep.claim.members.size();
    o << "n=" << n << " r=" << rep.r << " dimU=" << rep.claim.subspace.dim() << " |S|=" << rep.claim.members.size()
      << " identity=" << (rep.restricted_identity ? "exact" : "BROKEN") << " lb'=" << rep.rank_lower_bound
      << " lb=" << lb_full << (good ? " consistent; " : " INCONSISTENT; ");
    ok = ok && good;
  }
  double s = since(t0);
  o << s << "s";
  return {ok && s < 300, o.str()};
}

Verdict c11(std::uint64_t seed) {
  auto b = bridge_suite(seed);
  auto s = sanyal_suite(seed);
  bool fast = b.seconds + s.seconds < 600;
  return {b.ok() && s.ok() && fast, describe(b) + "; " + describe(s)};
}

Verdict c12(std::uint64_t seed) { return suite_verdict(chevalley_suite(seed), 300); }

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict(std::uint64_t)>> all{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
  if (only < 0 || only > static_cast<int>(all.size())) {
    std::fprintf(stderr, "usage: acceptance [1-%zu] [seed]\n", all.size());
    return 2;
  }
  bool ok = true;
  for (int i = 1; i <= static_cast<int>(all.size()); ++i) {
    if (only && i != only) continue;
    Verdict v;
    try {
      v = all[i - 1](seed);
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s %s\n", i, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
    ok = ok && v.pass;
  }
  return ok ? 0 : 1;
}
