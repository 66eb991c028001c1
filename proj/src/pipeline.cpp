#include "magicrank/pipeline.hpp"

#include <random>

#include "magicrank/rank.hpp"

namespace magicrank {

void check_decomposition(const StateVector& target, const std::vector<DecompositionTerm>& terms) {
  std::vector<CycloNumber> sum(target.amplitudes.size(), CycloNumber::zero(target.m));
  for (const auto& t : terms) {
    if (t.state.p() != target.p || t.state.n() != target.n)
      throw std::invalid_argument("decomposition term has the wrong (p, n)");
    const auto a = amplitudes(t.state, target.m);
    for (std::size_t x = 0; x < sum.size(); ++x)
      if (!a.amplitudes[x].is_zero()) sum[x] += t.coefficient * a.amplitudes[x];
  }
  for (std::size_t x = 0; x < sum.size(); ++x)
    if (sum[x] != target.amplitudes[x]) {
      auto pt = FpVector::from_index(target.p, target.n, x);
      throw DecompositionError("decomposition fails at basis point " + pt.to_string() + ": got " +
                                   sum[x].to_string() + ", want " + target.amplitudes[x].to_string(),
                               pt);
    }
}

PipelineReport theorem1_pipeline(std::uint32_t p, unsigned n, const std::vector<DecompositionTerm>& terms,
                                 const Cubic& cubic, unsigned prec) {
  return theorem1_pipeline(magic_polynomial(p, n, cubic), terms, prec);
}

PipelineReport theorem1_pipeline(const NonclassicalPoly& P, const std::vector<DecompositionTerm>& terms,
                                 unsigned prec) {
  if (terms.empty()) throw std::invalid_argument("theorem1_pipeline: empty decomposition");
  const auto p = P.p();
  const auto n = P.n();
  const unsigned m = std::max(default_root_order(p), static_cast<unsigned>(ipow(p, P.value_depth() + 1)));
  if (m % ipow(p, P.value_depth() + 1) != 0) throw std::invalid_argument("theorem1_pipeline: target too deep");
  const auto table = P.table();
  std::vector<CycloNumber> amps;
  for (const auto& v : table.values()) amps.push_back(phase(v, m));
  check_decomposition(StateVector{p, n, m, std::move(amps), n}, terms);
  const auto r = static_cast<unsigned>(terms.size());

  std::vector<AffineSubspace> hs;
  for (const auto& t : terms) hs.push_back(t.state.H);
  auto claim = pigeonhole_subspace(hs, false);
  const auto& U = claim.subspace;
  const auto A = parametrize(U);
  const auto pt = restrict(table, A);

  // e(P'(y)) == sum_{i in S} c_i e(Q_i(coords of A(y) in H_i))
  bool identity = true;
  for (std::uint64_t y = 0; y < pt.size() && identity; ++y) {
    const auto x = A(FpVector::from_index(p, U.dim(), y));
    CycloNumber rhs = CycloNumber::zero(m);
    for (auto i : claim.members) {
      const auto& st = terms[i].state;
      rhs += terms[i].coefficient * phase(st.Q.evaluate(st.H.coordinates(x)), m);
    }
    identity = (rhs == phase(pt.at(y), m));
  }

  auto restricted = interpolate(pt);
  auto scan = quadratic_scan(restricted, prec);
  const auto S = static_cast<unsigned>(claim.members.size());
  const int guaranteed = static_cast<int>(n) - 2 * static_cast<int>(r);
  const bool dim_ok = static_cast<int>(U.dim()) >= guaranteed;
  const auto lb = rank_lower_bound_from_correlation(p, 3, scan.max_corr_sq.exact, prec);
  return PipelineReport{.p = p,
                        .n = n,
                        .r = r,
                        .claim_hypothesis = 2 * r <= n,
                        .claim = std::move(claim),
                        .guaranteed_dim = guaranteed,
                        .dim_guarantee_met = dim_ok,
                        .restricted = std::move(restricted),
                        .restricted_identity = identity,
                        .scan = std::move(scan),
                        .exponent = correlation_exponent(p, 3),
                        .threshold_sq = correlation_threshold_sq(p, 3, S),
                        .rank_lower_bound = lb,
                        .chain_consistent = identity && S >= lb};
}

namespace {

AffineSubspace random_subspace(std::uint32_t p, unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
  auto random_vec = [&] {
    std::vector<std::uint32_t> v(n);
    for (auto& e : v) e = digit(rng);
    return FpVector(p, std::move(v));
  };
  // Bias towards large subspaces so the patterns are not all trivial.
  std::uniform_int_distribution<unsigned> gens(0, n);
  const auto g = std::max(gens(rng), gens(rng));
  std::vector<FpVector> generators;
  for (unsigned i = 0; i < g; ++i) generators.push_back(random_vec());
  return AffineSubspace(random_vec(), generators);
}

}  // namespace

ClaimCheck claim_random_check(std::uint64_t instances, std::uint64_t seed, unsigned max_n) {
  if (max_n < 2) throw std::invalid_argument("claim_random_check: max_n must be at least 2");
  std::mt19937_64 rng(seed);
  ClaimCheck out;
  for (std::uint64_t k = 0; k < instances; ++k) {
    const std::uint32_t p = std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 2;
    const unsigned n = std::uniform_int_distribution<unsigned>(2, max_n)(rng);
    const unsigned r = std::uniform_int_distribution<unsigned>(1, n / 2)(rng);
    std::vector<AffineSubspace> hs;
    for (unsigned i = 0; i < r; ++i) hs.push_back(random_subspace(p, n, rng));
    const auto res = pigeonhole_subspace(hs);

    std::string why;
    if (res.subspace.dim() + 2 * r < n) why = "dim(U)=" + std::to_string(res.subspace.dim()) + " < n-2r";
    std::vector<bool> in_s(r, false);
    for (auto i : res.members) in_s[i] = true;
    for (const auto& x : res.subspace.points()) {
      if (!why.empty()) break;
      for (unsigned i = 0; i < r; ++i)
        if (hs[i].contains(x) != in_s[i]) {
          why = "pattern differs from 1_S at " + x.to_string();
          break;
        }
    }
    ++out.instances;
    if (why.empty())
      ++out.passed;
    else
      out.failures.push_back("instance " + std::to_string(k) + " (p=" + std::to_string(p) +
                             ", n=" + std::to_string(n) + ", r=" + std::to_string(r) + "): " + why);
  }
  return out;
}

}  // namespace magicrank
