#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcov/extender.hpp"

namespace symcov {

/// One cataloged configuration (G, H, g) from which the census enumerates
/// every intermediate subgroup g^2 in L < H.
struct CatalogEntry {
  std::string name;
  PermutationGroup group;
  PermutationGroup outer;  // H
  Permutation flip;        // g, with g^2 in H
};

struct CensusRow {
  std::string group_name;
  std::uint64_t order_g = 0;
  std::uint64_t order_h = 0;
  std::uint64_t order_l = 0;
  std::string flip;
  int val_gamma = 0;
  int val_sigma = 0;
  std::string verdict;  // multicover-only | cover | pseudocover | valency-mismatch
  bool gamma_connected = false;
  bool sigma_connected = false;
  bool gamma_locally_primitive = false;
  ClassificationReport report;
};

/// All rows for one entry: one per proper subgroup L < H with g^2 in L and
/// g not in L, in deterministic (order, element-list) order.
std::vector<CensusRow> census_entry(const CatalogEntry& entry,
                                    std::size_t subgroup_order_cap = 512);

std::vector<CensusRow> run_census(const std::vector<CatalogEntry>& catalog,
                                  std::size_t subgroup_order_cap = 512);

/// The built-in desk-scale catalog: complete-graph configurations, small
/// p-power family instances, a dihedral example, and the PSL(2,17) witness.
std::vector<CatalogEntry> default_catalog(bool include_psl2 = true);

/// Catalog from a JSON file: a list of entries, each either
///   {"name": ..., "family": "px", "p":, "r":, "s":}  (H = H_s, g = g_s)
/// or an explicit {"name":..., "group": <group-spec>, "outer": [gens...],
/// "flip": [cycles...]}.
std::vector<CatalogEntry> catalog_from_json_file(const std::string& path);

std::string census_csv_header();
std::string census_row_csv(const CensusRow& row);

}  // namespace symcov
