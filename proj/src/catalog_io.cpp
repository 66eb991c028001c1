#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "magicrank/stabilizer.hpp"

namespace magicrank {

namespace fs = std::filesystem;
using nlohmann::json;

void save_catalog(const StabilizerCatalog& catalog, const fs::path& path) {
  json states = json::array();
  for (const auto& e : catalog.entries)
    states.push_back({{"subspace", e.state.H.to_text()}, {"q_terms", e.state.Q.to_text()}});
  json doc = {{"format_version", kCatalogFormatVersion},
              {"p", catalog.p},
              {"n", catalog.n},
              {"count", catalog.size()},
              {"states", std::move(states)}};

  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << doc.dump() << '\n';
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

StabilizerCatalog load_catalog(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  const auto doc = json::parse(in);
  if (doc.at("format_version").get<int>() != kCatalogFormatVersion)
    throw std::runtime_error("catalog format version mismatch in " + path.string());
  const auto p = doc.at("p").get<std::uint32_t>();
  const auto n = doc.at("n").get<unsigned>();
  const auto count = doc.at("count").get<std::uint64_t>();
  if (count != stabilizer_count(p, n) || doc.at("states").size() != count)
    throw std::runtime_error("catalog " + path.string() + " fails the count check");

  StabilizerCatalog cat{p, n, default_root_order(p), {}};
  for (const auto& s : doc.at("states")) {
    StabilizerState st(AffineSubspace::parse(s.at("subspace").get<std::string>()),
                       NonclassicalPoly::parse(s.at("q_terms").get<std::string>()));
    if (st.p() != p || st.n() != n) throw std::runtime_error("catalog entry has the wrong shape");
    auto v = amplitudes(st, cat.m);
    cat.entries.push_back(CatalogEntry{std::move(st), std::move(v)});
  }
  std::set<std::vector<int>> seen;
  for (const auto& e : cat.entries) {
    std::vector<int> key;
    for (const auto& a : e.vector.amplitudes) key.push_back(a.is_zero() ? -1 : a.root_exponent());
    if (!seen.insert(std::move(key)).second) throw std::runtime_error("catalog has duplicate states");
  }
  return cat;
}

fs::path default_cache_dir() {
  if (const char* d = std::getenv("MAGICRANK_CACHE_DIR"); d && *d) return d;
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "magicrank";
  return ".magicrank-cache";
}

fs::path catalog_cache_path(const fs::path& dir, std::uint32_t p, unsigned n) {
  return dir / ("stabilizers_v" + std::to_string(kCatalogFormatVersion) + "_p" + std::to_string(p) + "_n" +
                std::to_string(n) + ".json");
}

StabilizerCatalog load_or_enumerate(std::uint32_t p, unsigned n, const std::optional<fs::path>& dir) {
  const auto path = catalog_cache_path(dir ? *dir : default_cache_dir(), p, n);
  if (fs::exists(path)) {
    try {
      return load_catalog(path);
    } catch (const std::exception&) {
      // stale or corrupt; rebuild below
    }
  }
  auto cat = enumerate_stabilizers(p, n);
  try {
    save_catalog(cat, path);
  } catch (const std::exception&) {
    // caching is best effort
  }
  return cat;
}

}  // namespace magicrank
