#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "magicrank/errors.hpp"
#include "magicrank/stabilizer.hpp"

using namespace magicrank;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto d = fs::temp_directory_path() / ("magicrank-test-" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Stabilizer, CountFormula) {
  EXPECT_EQ(stabilizer_count(2, 1), 6u);
  EXPECT_EQ(stabilizer_count(2, 2), 60u);
  EXPECT_EQ(stabilizer_count(2, 3), 1080u);
  EXPECT_EQ(stabilizer_count(3, 1), 12u);
  EXPECT_EQ(stabilizer_count(3, 2), 360u);
}

TEST(Stabilizer, EnumerationMatchesFormula) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    auto cat = enumerate_stabilizers(p, n);
    EXPECT_EQ(cat.size(), stabilizer_count(p, n)) << p << " " << n;
    std::set<std::string> seen;
    for (const auto& e : cat.entries) {
      std::string key;
      for (const auto& a : e.vector.amplitudes) key += a.to_string() + ";";
      EXPECT_TRUE(seen.insert(key).second);
      EXPECT_EQ(e.vector.norm_dim, e.state.H.dim());
    }
  }
}

TEST(Stabilizer, BudgetRefusal) { EXPECT_THROW(enumerate_stabilizers(7, 3), BudgetExceeded); }

TEST(Stabilizer, FormValidation) {
  auto h = AffineSubspace::full(2, 1);
  EXPECT_NO_THROW(StabilizerState(h, NonclassicalPoly::weight(2, 1, 1)));
  EXPECT_THROW(StabilizerState(h, NonclassicalPoly::weight(2, 1, 2)), std::invalid_argument);
  EXPECT_THROW(StabilizerState(AffineSubspace::full(3, 1), NonclassicalPoly::weight(3, 1, 1)), std::invalid_argument);
}

TEST(Stabilizer, Membership) {
  auto cat = enumerate_stabilizers(2, 2);
  EXPECT_TRUE(is_stabilizer(plus_state(2, 2), cat));
  EXPECT_FALSE(is_stabilizer(magic_state(2, 2), cat));
  auto cat3 = enumerate_stabilizers(3, 1);
  EXPECT_TRUE(is_stabilizer(plus_state(3, 1), cat3));
  EXPECT_FALSE(is_stabilizer(magic_state(3, 1), cat3));
  // a phase multiple is still the same state
  auto v = cat.entries[17].vector;
  for (auto& a : v.amplitudes) a = a.times_root(3);
  EXPECT_TRUE(is_stabilizer(v, cat));
}

TEST(Catalog, RoundTrip) {
  auto dir = scratch("roundtrip");
  auto cat = enumerate_stabilizers(3, 1);
  auto path = catalog_cache_path(dir, 3, 1);
  save_catalog(cat, path);
  auto back = load_catalog(path);
  ASSERT_EQ(back.size(), cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_EQ(back.entries[i].state.H, cat.entries[i].state.H);
    EXPECT_EQ(back.entries[i].vector, cat.entries[i].vector);
  }
  fs::remove_all(dir);
}

TEST(Catalog, CorruptCacheFallsBack) {
  auto dir = scratch("corrupt");
  auto path = catalog_cache_path(dir, 2, 1);
  std::ofstream(path) << "{\"format_version\": 1, \"p\": 2, \"n\": 1, \"count\": 3, \"states\": []}";
  EXPECT_THROW(load_catalog(path), std::exception);
  auto cat = load_or_enumerate(2, 1, dir);
  EXPECT_EQ(cat.size(), 6u);
  EXPECT_NO_THROW(load_catalog(path));
  fs::remove_all(dir);
}

TEST(Catalog, VersionMismatchIsRejected) {
  auto dir = scratch("version");
  auto path = catalog_cache_path(dir, 2, 1);
  save_catalog(enumerate_stabilizers(2, 1), path);
  std::ifstream in(path);
  auto doc = nlohmann::json::parse(in);
  in.close();
  doc["format_version"] = 9;
  std::ofstream(path) << doc.dump();
  EXPECT_THROW(load_catalog(path), std::exception);
  fs::remove_all(dir);
}
