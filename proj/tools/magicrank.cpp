// magicrank: command-line driver for the exact stabilizer-rank workbench.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "magicrank/certificate.hpp"
#include "magicrank/chevalley.hpp"
#include "magicrank/errors.hpp"
#include "magicrank/kernels.hpp"
#include "magicrank/pipeline.hpp"
#include "magicrank/rank.hpp"
#include "magicrank/suites.hpp"
#include "report.hpp"

#ifndef MAGICRANK_VERSION
#define MAGICRANK_VERSION "dev"
#endif

using nlohmann::json;
using namespace magicrank;

namespace {

struct Config {
  std::string command;
  std::uint32_t p = 2;
  unsigned n = 1;
  unsigned d = 2;
  unsigned rmax = 0;  // 0: command default
  std::string state = "magic";
  std::string cubic = "1,0,0";
  std::string poly;
  std::string dict;
  std::string out;
  std::string format = "json";
  std::string suite = "all";
  std::string certificate;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;  // 0: command default
  unsigned threads = 0;
  unsigned precision = kDefaultPrecisionBits;

  json to_json() const {
    return {{"p", p},         {"n", n},         {"d", d},         {"rmax", rmax},       {"state", state},
            {"cubic", cubic}, {"poly", poly},   {"dict", dict},   {"out", out},         {"format", format},
            {"suite", suite}, {"seed", seed},   {"samples", samples}, {"threads", threads},
            {"precision_bits", precision}};
  }
};

struct Outcome {
  json result;
  bool ok = true;
};

// Usage-level failure (exit status 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Cubic parse_cubic(const std::string& s) {
  Cubic c;
  char comma1 = 0, comma2 = 0;
  std::istringstream in(s);
  if (!(in >> c.a >> comma1 >> c.b >> comma2 >> c.c) || comma1 != ',' || comma2 != ',')
    throw UsageError("--cubic expects a,b,c");
  return c;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return json::parse(in);
}

json value_json(const RealValue& v, unsigned digits = 20) {
  return {{"exact", v.exact.to_string()},
          {"interval", {v.interval.lo(), v.interval.hi()}},
          {"decimal", v.interval.to_string(static_cast<int>(digits))}};
}

StateVector load_state(const Config& cfg) {
  if (cfg.state == "magic") return magic_state(cfg.p, cfg.n, parse_cubic(cfg.cubic));
  if (cfg.state == "plus") return plus_state(cfg.p, cfg.n);
  if (cfg.state.rfind("file:", 0) == 0) {
    const auto j = read_json(cfg.state.substr(5));
    StateVector v{j.at("p").get<std::uint32_t>(), j.at("n").get<unsigned>(), 0,
                  cyclo_vector_from_json(j.at("amplitudes")), j.at("norm_dim").get<unsigned>()};
    if (v.amplitudes.empty()) throw UsageError("state file has no amplitudes");
    v.m = v.amplitudes[0].m();
    if (v.amplitudes.size() != ipow(v.p, v.n)) throw UsageError("state file: amplitude count is not p^n");
    return v;
  }
  throw UsageError("--state must be magic, plus or file:<path>");
}

StabilizerCatalog load_catalog_for(const Config& cfg, std::uint32_t p, unsigned n) {
  if (!cfg.dict.empty()) {
    auto cat = load_catalog(cfg.dict);
    if (cat.p != p || cat.n != n) throw UsageError("catalog " + cfg.dict + " is for a different (p, n)");
    return cat;
  }
  return load_or_enumerate(p, n);
}

NonclassicalPoly require_poly(const Config& cfg) {
  if (cfg.poly.empty()) throw UsageError("--poly is required (text form \"p n shift_num shift_depth ; i.. | j | c ; ...\")");
  return NonclassicalPoly::parse(cfg.poly);
}

Outcome cmd_stab_enum(const Config& cfg) {
  const auto path = cfg.dict.empty() ? catalog_cache_path(default_cache_dir(), cfg.p, cfg.n)
                                     : std::filesystem::path(cfg.dict);
  auto cat = enumerate_stabilizers(cfg.p, cfg.n);
  save_catalog(cat, path);
  const auto formula = stabilizer_count(cfg.p, cfg.n);
  return {{{"count", cat.size()}, {"formula", formula}, {"matches", cat.size() == formula},
           {"catalog_path", path.string()}},
          cat.size() == formula};
}

Outcome cmd_stab_rank(const Config& cfg) {
  const auto v = load_state(cfg);
  const auto cat = load_catalog_for(cfg, v.p, v.n);
  const unsigned rmax = cfg.rmax ? cfg.rmax : 4;
  const auto res = stab_rank_exact(v, cat, rmax);
  json r = {{"chi", res.chi ? json(*res.chi) : json(nullptr)},
            {"exhausted", !res.chi},
            {"rmax", rmax},
            {"catalog_size", cat.size()},
            {"tested_per_r", res.tested_per_r},
            {"pruned_per_r", res.pruned_per_r}};
  if (res.chi) r["certificate"] = make_certificate(v, res);
  return {r, true};
}

Outcome cmd_corr_scan(const Config& cfg) {
  const auto rep = magic_correlation_bound(cfg.p, cfg.n, parse_cubic(cfg.cubic), cfg.precision);
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json j = {{"p", rep.p},
              {"n", e.n},
              {"budget", kScanBudget},
              {"max_corr_sq_interval", {e.scan.max_corr_sq.interval.lo(), e.scan.max_corr_sq.interval.hi()}},
              {"max_corr_sq", value_json(e.scan.max_corr_sq)},
              {"argmax_poly", e.scan.argmax.to_text()},
              {"candidates", e.scan.candidates},
              {"distinct_values", e.scan.distinct_values}};
    if (e.bound_rhs) {
      const auto sq = e.scan.max_corr_sq.exact * e.scan.max_corr_sq.exact;
      j["max_corr_fourth"] = value_json(certify(sq, cfg.precision));
      j["bound_rhs"] = e.bound_rhs->get_str();
      j["holds"] = *e.holds;
    }
    entries.push_back(std::move(j));
  }
  return {{{"p", rep.p}, {"entries", entries}, {"strictly_decreasing", rep.strictly_decreasing}, {"holds", rep.holds}},
          rep.holds};
}

Outcome cmd_rank2(const Config& cfg) {
  const auto P = require_poly(cfg);
  const auto res = exact_rank2(P);
  const auto cert = make_certificate(P, res);
  json r = {{"rank", res.rank}, {"subsets_tested", res.subsets_tested}, {"certificate", cert}};
  bool ok = true;
  if (P.representation_degree() == 2 && res.rank > 0) {
    // The rank -> correlation direction must not refute the exact rank.
    const auto lb = rank_lb_by_correlation(P, 2, res.rank, cfg.precision);
    r["correlation_check"] = make_certificate(P, lb);
    ok = !lb.proven;
  }
  return {r, ok};
}

Outcome cmd_frank(const Config& cfg) {
  const auto P = require_poly(cfg);
  if (cfg.d < 2) throw UsageError("frank needs --d >= 2");
  // Root order covering both P and the dictionary's deepest level.
  const unsigned level = std::max(P.value_depth(), (cfg.d - 2) / (P.p() - 1));
  const auto f = PhaseTable::of(P, static_cast<unsigned>(ipow(P.p(), level + 1)));
  const unsigned rmax = cfg.rmax ? cfg.rmax : static_cast<unsigned>(f.size());
  const auto res = frank_exact(f, cfg.d, rmax);
  json r = {{"d", cfg.d},
            {"frank", res.rank ? json(*res.rank) : json(nullptr)},
            {"exhausted", !res.rank},
            {"dictionary_size", res.dictionary_size},
            {"tested_per_r", res.tested_per_r}};
  if (cfg.d == 2) r["fourier_sparsity"] = fourier_sparsity(f);
  if (res.rank) r["certificate"] = make_certificate(f, cfg.d, res);
  return {r, true};
}

Outcome cmd_nor_check(const Config& cfg) {
  if (cfg.p != 2) throw UsageError("nor-check is defined for p = 2");
  unsigned r = cfg.rmax;
  if (r == 0) {
    if (cfg.d < 2 || cfg.n < cfg.d) throw UsageError("nor-check: need d >= 2 and n >= d for a default r");
    r = (cfg.n - 1) / (cfg.d - 1);
  }
  const auto rep = nor_rank_theorem_check(cfg.n, cfg.d, r, cfg.seed, cfg.samples ? cfg.samples : 10000);
  json j = {{"n", rep.n},
            {"d", rep.d},
            {"r", rep.r},
            {"hypothesis", rep.hypothesis},
            {"exhaustive", rep.exhaustive},
            {"family_size", rep.family_size},
            {"tuples_checked", rep.tuples_checked},
            {"tuples_with_second_root", rep.tuples_with_second_root},
            {"nor_separates_origin", rep.nor_separates},
            {"holds", rep.holds()},
            {"statement", "every checked tuple has a nonzero common root, so NOR cannot factor through it"}};
  if (rep.counterexample) {
    json ce = json::array();
    for (const auto& q : *rep.counterexample) ce.push_back(q.to_text());
    j["counterexample"] = ce;
  }
  return {j, !rep.hypothesis || rep.holds()};
}

Outcome cmd_claim1(const Config& cfg) {
  const auto count = cfg.samples ? cfg.samples : 500;
  const auto c = claim_random_check(count, cfg.seed, std::max(2u, cfg.n));
  return {{{"instances", c.instances}, {"passed", c.passed}, {"failures", c.failures}}, c.passed == c.instances};
}

std::vector<DecompositionTerm> load_decomposition(const std::string& path, std::uint32_t p, unsigned n) {
  const auto j = read_json(path);
  const auto& terms = j.contains("terms") ? j.at("terms") : j.at("states");
  std::vector<CycloNumber> coeffs;
  if (j.contains("coefficients"))
    coeffs = cyclo_vector_from_json(j.at("coefficients"));
  std::vector<DecompositionTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    auto c = t.contains("coefficient") ? CycloNumber::parse(t.at("coefficient").get<std::string>()) : coeffs.at(i);
    out.push_back({c, StabilizerState(AffineSubspace::parse(t.at("subspace").get<std::string>()),
                                      NonclassicalPoly::parse(t.at("q_terms").get<std::string>()))});
  }
  if (j.contains("p") && (j.at("p").get<std::uint32_t>() != p || j.at("n").get<unsigned>() != n))
    throw UsageError("decomposition file is for a different (p, n)");
  return out;
}

Outcome cmd_pipeline(const Config& cfg) {
  std::vector<DecompositionTerm> terms;
  json source;
  if (!cfg.dict.empty()) {
    terms = load_decomposition(cfg.dict, cfg.p, cfg.n);
    source = cfg.dict;
  } else {
    const auto cat = load_or_enumerate(cfg.p, cfg.n);
    const auto res = stab_rank_exact(magic_state(cfg.p, cfg.n, parse_cubic(cfg.cubic)), cat, cfg.rmax ? cfg.rmax : 4);
    if (!res.chi) throw UsageError("no decomposition found within --rmax");
    for (std::size_t i = 0; i < res.states.size(); ++i) terms.push_back({res.coefficients[i], res.states[i]});
    source = "searched witness";
  }
  const auto rep = theorem1_pipeline(cfg.p, cfg.n, terms, parse_cubic(cfg.cubic), cfg.precision);
  json seps = json::array();
  for (const auto& h : rep.claim.separators) seps.push_back({{"a", h.a.to_string()}, {"b", h.b}});
  json pattern = json::array();
  for (bool b : rep.claim.pattern) pattern.push_back(b ? 1 : 0);
  const auto S = rep.claim.members.size();
  json r = {{"decomposition", source},
            {"r", rep.r},
            {"claim_hypothesis", rep.claim_hypothesis},
            {"U", rep.claim.subspace.to_text()},
            {"dim_U", rep.claim.subspace.dim()},
            {"guaranteed_dim", rep.guaranteed_dim},
            {"dim_guarantee_met", rep.dim_guarantee_met},
            {"S", rep.claim.members},
            {"pattern", pattern},
            {"pattern_count", rep.claim.pattern_count},
            {"x0", rep.claim.witness.to_string()},
            {"separators", seps},
            {"restricted_poly", rep.restricted.to_text()},
            {"restricted_identity", rep.restricted_identity},
            {"scan",
             {{"max_corr_sq", value_json(rep.scan.max_corr_sq)},
              {"argmax_poly", rep.scan.argmax.to_text()},
              {"candidates", rep.scan.candidates}}},
            {"exponent", rep.exponent},
            {"threshold_sq", rep.threshold_sq.get_str()},
            {"rank_lower_bound", rep.rank_lower_bound},
            {"chain", std::to_string(S) + " = |S| >= frank_3(e(P')) >= rank_3(P') >= " +
                          std::to_string(rep.rank_lower_bound)},
            {"chain_consistent", rep.chain_consistent}};
  const bool ok = rep.restricted_identity && rep.chain_consistent && (!rep.claim_hypothesis || rep.dim_guarantee_met);
  return {r, ok};
}

Outcome cmd_verify(const Config& cfg) {
  json suites = json::array();
  bool ok = true;
  for (const auto& s : run_suites(cfg.suite, cfg.seed)) {
    suites.push_back({{"name", s.name},
                      {"passed", s.passed},
                      {"total", s.total},
                      {"ok", s.ok()},
                      {"seconds", s.seconds},
                      {"failures", s.failures}});
    ok = ok && s.ok();
  }
  return {{{"suites", suites}, {"all_ok", ok}}, ok};
}

Outcome cmd_verify_certificate(const Config& cfg) {
  if (cfg.certificate.empty()) throw UsageError("verify-certificate needs a certificate file");
  auto doc = read_json(cfg.certificate);
  // Reports from stab-rank etc. wrap the certificate.
  if (doc.contains("result") && doc["result"].contains("certificate")) doc = doc["result"]["certificate"];
  const auto v = verify_certificate(doc, cfg.precision);
  return {{{"kind", doc.value("kind", "")}, {"valid", v.ok}, {"detail", v.detail}}, v.ok};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stabilizer-rank and higher-order Fourier workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--p", cfg.p, "prime")->check(CLI::PositiveNumber);
  app.add_option("--n", cfg.n, "number of variables / qudits");
  app.add_option("--d", cfg.d, "degree parameter");
  app.add_option("--rmax", cfg.rmax, "largest rank to search (nor-check: tuple size r)");
  app.add_option("--state", cfg.state, "magic | plus | file:<path>");
  app.add_option("--cubic", cfg.cubic, "single-variable cubic a,b,c for p > 3");
  app.add_option("--poly", cfg.poly, "polynomial in text form");
  app.add_option("--dict", cfg.dict, "catalog or decomposition file");
  app.add_option("--out", cfg.out, "report path (default stdout)");
  app.add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--samples", cfg.samples, "instance count for randomized checks");
  app.add_option("--threads", cfg.threads, "worker cap (0 = all cores)");
  app.add_option("--precision-bits", cfg.precision, "starting interval precision");

  using Handler = Outcome (*)(const Config&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
      {"stab-enum", "enumerate stabilizer states and write the catalog", cmd_stab_enum},
      {"stab-rank", "exact stabilizer rank with certificate", cmd_stab_rank},
      {"corr-scan", "magic-state correlation with quadratic phases", cmd_corr_scan},
      {"rank2", "exact rank of a quadratic", cmd_rank2},
      {"frank", "exact Fourier rank over the degree-(d-1) dictionary", cmd_frank},
      {"nor-check", "second common roots for NOR tuples", cmd_nor_check},
      {"claim1", "random pigeonhole-subspace instances", cmd_claim1},
      {"pipeline", "restrict a magic-state decomposition and report the rank chain", cmd_pipeline},
      {"verify", "run verification suites", cmd_verify},
      {"verify-certificate", "re-check a certificate file", cmd_verify_certificate},
  };
  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, help, fn] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (name == "verify") sub->add_option("--suite", cfg.suite, "suite name or all");
    if (name == "verify-certificate") sub->add_option("certificate", cfg.certificate, "certificate JSON")->required();
    handlers[sub] = fn;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Handler handler = nullptr;
  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    handler = handlers.at(sub);
  }
  kernels::set_max_threads(cfg.threads);

  const auto t0 = std::chrono::steady_clock::now();
  json report = {{"command", cfg.command}, {"version", MAGICRANK_VERSION}, {"config", cfg.to_json()}, {"seed", cfg.seed}};
  int rc = 0;
  try {
    require_prime(cfg.p);
    auto outcome = handler(cfg);
    report["result"] = std::move(outcome.result);
    report["ok"] = outcome.ok;
    rc = outcome.ok ? 0 : 1;
  } catch (const BudgetExceeded& e) {
    report["error"] = std::string("budget exceeded: ") + e.what();
    rc = 2;
  } catch (const UsageError& e) {
    report["error"] = e.what();
    rc = 2;
  } catch (const std::invalid_argument& e) {
    report["error"] = e.what();
    rc = 2;
  } catch (const nlohmann::json::exception& e) {
    report["error"] = std::string("malformed input: ") + e.what();
    rc = 2;
  } catch (const Indeterminate& e) {
    report["error"] = std::string("indeterminate: ") + e.what();
    rc = 2;
  } catch (const std::exception& e) {
    report["error"] = std::string("internal check failed: ") + e.what();
    rc = 1;
  }
  report["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (rc == 2 && report.contains("error")) std::cerr << "magicrank: " << report["error"].get<std::string>() << '\n';
  try {
    cli::emit(report, cfg.format, cfg.out);
  } catch (const std::exception& e) {
    std::cerr << "magicrank: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
