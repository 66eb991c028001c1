#include "magicrank/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace magicrank {

using nlohmann::json;

json to_json(const RealValue& v) {
  return {{"exact", v.exact.to_string()}, {"interval", {v.interval.lo(), v.interval.hi()}}};
}

json to_json(const std::vector<CycloNumber>& values) {
  json a = json::array();
  for (const auto& z : values) a.push_back(z.to_string());
  return a;
}

std::vector<CycloNumber> cyclo_vector_from_json(const json& j) {
  std::vector<CycloNumber> out;
  for (const auto& s : j) out.push_back(CycloNumber::parse(s.get<std::string>()));
  return out;
}

TorusValue parse_torus(std::uint32_t p, const std::string& text) {
  if (text == "0") return TorusValue(p);
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("torus value must be num/den: " + text);
  const auto num = std::stoll(text.substr(0, slash));
  auto den = std::stoull(text.substr(slash + 1));
  unsigned depth = 0;
  while (den > p && den % p == 0) {
    den /= p;
    ++depth;
  }
  if (den != p) throw std::invalid_argument("torus denominator is not a power of p: " + text);
  return TorusValue(p, num, depth);
}

namespace {

json vec_json(const FpVector& v) { return json(std::vector<std::uint32_t>(v.entries().begin(), v.entries().end())); }

FpVector vec_from_json(std::uint32_t p, const json& j) { return FpVector(p, j.get<std::vector<std::uint32_t>>()); }

VerifyOutcome fail(std::string why) { return VerifyOutcome{false, std::move(why)}; }

VerifyOutcome verify_exact_rank(const json& c) {
  const auto P = NonclassicalPoly::parse(c.at("target").get<std::string>());
  const auto rank = c.at("rank").get<unsigned>();
  std::vector<FpVector> funcs;
  for (const auto& f : c.at("functionals")) funcs.push_back(vec_from_json(P.p(), f));
  if (funcs.size() != rank) return fail("functional count differs from rank");
  const auto& gamma = c.at("gamma");
  if (gamma.size() != ipow(P.p(), rank)) return fail("lookup table has the wrong size");
  const auto t = P.table();
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    const auto pt = FpVector::from_index(P.p(), P.n(), x);
    std::uint64_t key = 0;
    for (const auto& f : funcs) key = key * P.p() + f.dot(pt);
    if (gamma[key].is_null() || parse_torus(P.p(), gamma[key].get<std::string>()) != t.at(x))
      return fail("lookup table disagrees with P at " + pt.to_string());
  }
  const auto again = exact_rank2(P);
  if (again.rank != rank) return fail("exhaustive search finds rank " + std::to_string(again.rank));
  return VerifyOutcome{true, "factorization reproduces P on all points; rank " + std::to_string(rank) +
                                 " is minimal by exhaustive search"};
}

VerifyOutcome verify_correlation(const json& c, unsigned prec) {
  const auto P = NonclassicalPoly::parse(c.at("target").get<std::string>());
  const auto Q = NonclassicalPoly::parse(c.at("argmax").get<std::string>());
  const auto d = c.at("d").get<unsigned>();
  const auto r = c.at("r").get<unsigned>();
  const auto claimed = CycloNumber::parse(c.at("max_corr_sq").at("exact").get<std::string>());
  const unsigned m = claimed.m();
  const auto direct = phase_inner_product(phase_exponents(P.table(), m), phase_exponents(Q.table(), m), m).abs2();
  if (direct != claimed) return fail("stored correlation does not match <e(P), e(Q)>");
  const auto thr = correlation_threshold_sq(P.p(), d, r);
  if (thr != mpq_class(c.at("threshold_sq").get<std::string>())) return fail("threshold mismatch");
  const bool proven = compare_real(claimed, thr, prec) < 0;
  if (proven != c.at("proven").get<bool>()) return fail("inequality re-evaluates differently");
  const auto scan = correlation_scan(P, d - 1, prec);
  if (scan.max_corr_sq.exact != claimed) return fail("exhaustive rescan finds a different maximum");
  return VerifyOutcome{true, proven ? "rank > " + std::to_string(r) + " certified" : "bound not proven (consistent)"};
}

VerifyOutcome verify_frank(const json& c) {
  const auto p = c.at("p").get<std::uint32_t>();
  const auto n = c.at("n").get<unsigned>();
  const auto m = c.at("m").get<unsigned>();
  const auto d = c.at("d").get<unsigned>();
  const auto target = cyclo_vector_from_json(c.at("target"));
  const auto coeffs = cyclo_vector_from_json(c.at("coefficients"));
  const auto rank = c.at("rank").get<unsigned>();
  std::vector<NonclassicalPoly> comps;
  for (const auto& q : c.at("components")) comps.push_back(NonclassicalPoly::parse(q.get<std::string>()));
  if (comps.size() != rank || coeffs.size() != rank) return fail("component count differs from rank");
  std::vector<CycloNumber> sum(target.size(), CycloNumber::zero(m));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].p() != p || comps[i].n() != n) return fail("component has the wrong shape");
    if (comps[i].representation_degree() + 1 > d) return fail("component degree exceeds d-1");
    const auto t = comps[i].table();
    for (std::uint64_t x = 0; x < t.size(); ++x) sum[x] += coeffs[i] * phase(t.at(x), m);
  }
  if (sum != target) return fail("combination does not reproduce f");
  if (rank > 1) {
    const auto below = frank_exact(PhaseTable(p, n, m, target), d, rank - 1);
    if (below.rank) return fail("a shorter combination exists");
  }
  return VerifyOutcome{true, "combination reproduces f; no combination of " + std::to_string(rank - 1) +
                                 " phases exists"};
}

VerifyOutcome verify_stab_rank(const json& c) {
  const auto p = c.at("p").get<std::uint32_t>();
  const auto n = c.at("n").get<unsigned>();
  const auto m = c.at("m").get<unsigned>();
  const auto chi = c.at("chi").get<unsigned>();
  StateVector v{p, n, m, cyclo_vector_from_json(c.at("target")), c.at("norm_dim").get<unsigned>()};
  const auto coeffs = cyclo_vector_from_json(c.at("coefficients"));
  const auto& states = c.at("states");
  if (states.size() != chi || coeffs.size() != chi) return fail("term count differs from chi");
  std::vector<CycloNumber> sum(v.amplitudes.size(), CycloNumber::zero(m));
  for (std::size_t i = 0; i < chi; ++i) {
    StabilizerState s(AffineSubspace::parse(states[i].at("subspace").get<std::string>()),
                      NonclassicalPoly::parse(states[i].at("q_terms").get<std::string>()));
    const auto a = amplitudes(s, m);
    for (std::size_t x = 0; x < sum.size(); ++x)
      if (!a.amplitudes[x].is_zero()) sum[x] += coeffs[i] * a.amplitudes[x];
  }
  if (sum != v.amplitudes) return fail("combination does not reproduce the target state");
  if (chi > 1) {
    const auto catalog = enumerate_stabilizers(p, n);
    const auto below = stab_rank_exact(v, catalog, chi - 1);
    if (below.chi) return fail("a shorter stabilizer decomposition exists");
  }
  return VerifyOutcome{true, "decomposition reproduces the state; all " + std::to_string(chi - 1) +
                                 "-subsets of the catalog fail"};
}

}  // namespace

RankCertificate make_certificate(const NonclassicalPoly& P, const Rank2Result& r) {
  json funcs = json::array();
  for (const auto& f : r.functionals) funcs.push_back(vec_json(f));
  json gamma = json::array();
  for (const auto& g : r.gamma) gamma.push_back(g ? json(g->to_string()) : json(nullptr));
  return {{"kind", "exact-rank"}, {"target", P.to_text()},         {"rank", r.rank},
          {"functionals", funcs}, {"gamma", gamma},                {"subsets_tested", r.subsets_tested}};
}

RankCertificate make_certificate(const NonclassicalPoly& P, const CorrelationBound& b) {
  return {{"kind", "correlation-bound"},
          {"target", P.to_text()},
          {"d", b.d},
          {"r", b.r},
          {"argmax", b.scan.argmax.to_text()},
          {"max_corr_sq", to_json(b.scan.max_corr_sq)},
          {"threshold_sq", b.threshold_sq.get_str()},
          {"candidates", b.scan.candidates},
          {"proven", b.proven}};
}

RankCertificate make_certificate(const PhaseTable& f, unsigned d, const FrankResult& r) {
  if (!r.rank) throw std::invalid_argument("make_certificate: frank search was exhausted");
  json comps = json::array();
  for (const auto& q : r.components) comps.push_back(q.to_text());
  return {{"kind", "frank-decomposition"},
          {"p", f.p()},
          {"n", f.n()},
          {"m", f.m()},
          {"d", d},
          {"target", to_json(f.values())},
          {"rank", *r.rank},
          {"components", comps},
          {"coefficients", to_json(r.coefficients)},
          {"tested_per_r", r.tested_per_r}};
}

RankCertificate make_certificate(const StateVector& v, const StabRankResult& r) {
  if (!r.chi) throw std::invalid_argument("make_certificate: stabilizer-rank search was exhausted");
  json states = json::array();
  for (const auto& s : r.states) states.push_back({{"subspace", s.H.to_text()}, {"q_terms", s.Q.to_text()}});
  return {{"kind", "stab-rank-decomposition"},
          {"p", v.p},
          {"n", v.n},
          {"m", v.m},
          {"norm_dim", v.norm_dim},
          {"target", to_json(v.amplitudes)},
          {"chi", *r.chi},
          {"states", states},
          {"coefficients", to_json(r.coefficients)},
          {"catalog_indices", r.indices},
          {"tested_per_r", r.tested_per_r},
          {"pruned_per_r", r.pruned_per_r}};
}

VerifyOutcome verify_certificate(const RankCertificate& cert, unsigned prec) {
  try {
    const auto kind = cert.at("kind").get<std::string>();
    if (kind == "exact-rank") return verify_exact_rank(cert);
    if (kind == "correlation-bound") return verify_correlation(cert, prec);
    if (kind == "frank-decomposition") return verify_frank(cert);
    if (kind == "stab-rank-decomposition") return verify_stab_rank(cert);
    return fail("unknown certificate kind '" + kind + "'");
  } catch (const std::exception& e) {
    return fail(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace magicrank
