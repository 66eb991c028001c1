#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "magicrank/cyclo.hpp"
#include "magicrank/polynomial.hpp"
#include "magicrank/subspace.hpp"

namespace magicrank {

/// Normal form (H, Q): Q lives on local coordinates of H. For p = 2 it has
/// degree <= 2 and depth <= 1; for odd p it is a classical quadratic.
struct StabilizerState {
  AffineSubspace H;
  NonclassicalPoly Q;

  StabilizerState(AffineSubspace h, NonclassicalPoly q);
  std::uint32_t p() const { return H.p(); }
  unsigned n() const { return H.n(); }
};

/// Amplitude table p^(-norm_dim/2) * amplitudes, the scale kept symbolic.
struct StateVector {
  std::uint32_t p;
  unsigned n;
  unsigned m;
  std::vector<CycloNumber> amplitudes;
  unsigned norm_dim;

  std::vector<bool> support() const;
  bool operator==(const StateVector& o) const;
};

/// Entries e(Q(y)) at x = param(y) on H, zero elsewhere.
StateVector amplitudes(const StabilizerState& s, unsigned m);
StateVector amplitudes(const StabilizerState& s);

/// Number of stabilizer states p^n prod_{k=1..n} (p^k + 1).
std::uint64_t stabilizer_count(std::uint32_t p, unsigned n);

/// Largest catalog we are willing to build.
inline constexpr std::uint64_t kCatalogBudget = 20000;

struct CatalogEntry {
  StabilizerState state;
  StateVector vector;
};

struct StabilizerCatalog {
  std::uint32_t p;
  unsigned n;
  unsigned m;
  std::vector<CatalogEntry> entries;

  std::size_t size() const { return entries.size(); }
};

/// Every stabilizer state on n qudits, one per global-phase class, with the
/// amplitude at the first support point equal to 1. Throws BudgetExceeded past
/// kCatalogBudget, and std::logic_error if the count disagrees with the formula.
StabilizerCatalog enumerate_stabilizers(std::uint32_t p, unsigned n);

/// Tensor-power magic state; p > 3 needs a genuine cubic.
StateVector magic_state(std::uint32_t p, unsigned n, const Cubic& cubic = {});
/// |+>^n.
StateVector plus_state(std::uint32_t p, unsigned n);

/// True iff v equals a catalog entry times a root of unity.
bool is_stabilizer(const StateVector& v, const StabilizerCatalog& catalog);

// Catalog persistence. Files are JSON, written via temp file + rename.

inline constexpr int kCatalogFormatVersion = 1;

void save_catalog(const StabilizerCatalog& catalog, const std::filesystem::path& path);
/// Rebuilds amplitudes and re-checks the count formula; throws on any mismatch.
StabilizerCatalog load_catalog(const std::filesystem::path& path);

/// $MAGICRANK_CACHE_DIR if set, else ~/.cache/magicrank, else ./.magicrank-cache.
std::filesystem::path default_cache_dir();
std::filesystem::path catalog_cache_path(const std::filesystem::path& dir, std::uint32_t p, unsigned n);
/// Loads the cached catalog when valid, otherwise enumerates and writes it.
StabilizerCatalog load_or_enumerate(std::uint32_t p, unsigned n, const std::optional<std::filesystem::path>& dir = {});

}  // namespace magicrank
