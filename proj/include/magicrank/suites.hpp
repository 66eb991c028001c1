#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace magicrank {

/// Outcome of one verification suite; every case is exact or certified.
struct SuiteResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  std::vector<std::string> failures;  // at most a handful are kept
  double seconds = 0;

  bool ok() const { return total > 0 && passed == total; }
  void record(bool good, const std::string& what);
};

/// The lift identities over F_2^2 and F_3^2.
SuiteResult identities_suite();
/// <f, g> == <f^, g^> on random phase tables, (p, n) in {2, 3} x {1, 2, 3}.
SuiteResult parseval_suite(std::uint64_t seed, unsigned per_case = 1000);
/// Derivative inequality on random pairs, p = 2, n <= 3.
SuiteResult lovett_suite(std::uint64_t seed, unsigned pairs = 1000);
/// Fourier support and magnitudes of e(|x o h|/4) for all h, n <= max_n.
SuiteResult fourier_support_suite(unsigned max_n = 3);
/// Random pigeonhole instances.
SuiteResult claim_suite(std::uint64_t seed, unsigned instances = 500);
/// Exhaustive second-root check (n=4, d=3, r=1) plus random divisibility checks.
SuiteResult chevalley_suite(std::uint64_t seed, unsigned tuples = 10000);
/// rank_2 <= frank_2 <= 4^rank_2 on every quadratic with p = 2, n <= 3 plus random shifts.
SuiteResult bridge_suite(std::uint64_t seed, unsigned random_count = 200);
/// frank_2 >= rank_2^2 on the same family.
SuiteResult sanyal_suite(std::uint64_t seed, unsigned random_count = 200);

std::vector<std::string> suite_names();
/// Runs one named suite, or all of them for "all".
std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed);

}  // namespace magicrank
