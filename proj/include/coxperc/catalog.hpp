#pragma once

#include "coxperc/extremal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coxperc {

// Named systems of order at most 2000 used by the sweep-style commands and
// acceptance checks.
std::vector<std::string> small_builtin_roster();

struct CatalogRow {
  std::string system;
  int rank = 0;
  std::string subset_i, subset_j;
  ExtremalReport report;
  std::string strong_i, strong_j;  // verified strong starts, "k/k"
  bool balanced_identity_ok = false;
};

struct CatalogOptions {
  long coset_cap = kDefaultCosetCap;
  std::uint64_t seed = 0;  // catalog output is seed-independent; recorded for the header
  std::vector<std::string> systems;  // empty = small_builtin_roster()
};

// One row per ordered pair of distinct codimension-one subsets of each
// system: the exponent report plus the strong-percolation status of both
// quotients. Rows are emitted in a fixed order regardless of configuration.
std::vector<CatalogRow> run_catalog(const CatalogOptions& options);

std::string catalog_csv(const std::vector<CatalogRow>& rows);
std::string catalog_json(const std::vector<CatalogRow>& rows);

}  // namespace coxperc
