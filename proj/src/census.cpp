#include "symcov/census.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symcov/errors.hpp"
#include "symcov/families.hpp"
#include "symcov/group_io.hpp"
#include "symcov/tetra.hpp"

namespace symcov {

std::vector<CensusRow> census_entry(const CatalogEntry& entry,
                                    std::size_t subgroup_order_cap) {
  const auto& g = entry.group;
  const auto& h = entry.outer;
  const auto& flip = entry.flip;
  CosetGraph sigma(g, h, flip);

  std::vector<CensusRow> rows;
  for (const auto& sub : all_subgroups(h, subgroup_order_cap)) {
    if (sub.order() == h.order()) continue;
    if (!sub.contains(flip * flip) || sub.contains(flip)) continue;
    auto pair = build_pair(g, sub, h, flip);
    auto report = classify(pair);
    CensusRow row;
    row.group_name = entry.name;
    row.order_g = g.order();
    row.order_h = h.order();
    row.order_l = sub.order();
    row.flip = flip.to_string();
    row.val_gamma = report.val_gamma;
    row.val_sigma = report.val_sigma;
    row.verdict = report.verdict();
    row.gamma_connected = pair.gamma.is_connected();
    row.sigma_connected = sigma.is_connected();
    row.gamma_locally_primitive = pair.gamma.is_locally_primitive();
    row.report = std::move(report);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CensusRow> run_census(const std::vector<CatalogEntry>& catalog,
                                  std::size_t subgroup_order_cap) {
  std::vector<CensusRow> rows;
  for (const auto& entry : catalog) {
    auto part = census_entry(entry, subgroup_order_cap);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  return rows;
}

std::vector<CatalogEntry> default_catalog(bool include_psl2) {
  std::vector<CatalogEntry> catalog;

  {
    auto s4 = symmetric_group(4);
    PermutationGroup h(4, {Permutation::from_cycles(4, {{0, 1}}),
                           Permutation::from_cycles(4, {{0, 1, 2}})},
                       "S3");
    catalog.push_back(
        {"K4-S4", s4, std::move(h), Permutation::from_cycles(4, {{0, 3}})});
  }
  {
    auto a4 = alternating_group(4);
    PermutationGroup h(4, {Permutation::from_cycles(4, {{0, 1, 2}})}, "Z3");
    catalog.push_back({"K4-A4", a4, std::move(h),
                       Permutation::from_cycles(4, {{0, 3}, {1, 2}})});
  }
  {
    // C4 and its quotient K2 under the antipodal block system
    auto d8 = dihedral_group(8);
    PermutationGroup h(4, {Permutation::from_cycles(4, {{1, 3}}),
                           Permutation::from_cycles(4, {{0, 2}})},
                       "antipodal-stab");
    catalog.push_back({"C4-over-K2", d8, std::move(h),
                       Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  }

  for (auto [p, r, s] :
       {std::array<int, 3>{2, 3, 1}, {2, 3, 2}, {2, 4, 1}, {2, 4, 2}, {2, 4, 3},
        {2, 5, 1}, {2, 5, 3}, {2, 5, 4}, {3, 3, 1}, {3, 3, 2}}) {
    catalog.push_back({"px(" + std::to_string(p) + "," + std::to_string(r) +
                           "," + std::to_string(s) + ")",
                       px_group(p, r), px_subgroup_Hs(p, r, s),
                       px_flip_gs(p, r, s)});
  }

  if (include_psl2) {
    auto witness = psl2_example(17);
    catalog.push_back({"psl2-17", witness.sigma.group(),
                       witness.sigma.point_stabilizer(), witness.sigma.flip()});
  }
  return catalog;
}

std::vector<CatalogEntry> catalog_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto doc = nlohmann::json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_array())
    throw precondition_error("catalog must be a JSON array");

  std::vector<CatalogEntry> catalog;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("name") || !item["name"].is_string())
      throw precondition_error("catalog entry needs a name");
    std::string name = item["name"].get<std::string>();
    if (item.contains("family")) {
      if (item["family"] != "px")
        throw precondition_error("unknown family in catalog entry " + name);
      for (const char* key : {"p", "r", "s"})
        if (!item.contains(key) || !item[key].is_number_integer())
          throw precondition_error("px entry needs integer p, r, s");
      int p = item["p"].get<int>(), r = item["r"].get<int>(),
          s = item["s"].get<int>();
      catalog.push_back(
          {std::move(name), px_group(p, r), px_subgroup_Hs(p, r, s),
           px_flip_gs(p, r, s)});
      continue;
    }
    for (const char* key : {"group", "outer", "flip"})
      if (!item.contains(key))
        throw precondition_error("catalog entry " + name + " needs " + key);
    auto group = group_from_json(item["group"].dump());
    if (!item["outer"].is_array())
      throw precondition_error("outer must be an array of permutations");
    std::vector<Permutation> outer_gens;
    for (const auto& spec : item["outer"])
      outer_gens.push_back(
          permutation_from_cycles_json(group.degree(), spec.dump()));
    PermutationGroup outer(group.degree(), std::move(outer_gens));
    auto flip = permutation_from_cycles_json(group.degree(), item["flip"].dump());
    catalog.push_back({std::move(name), std::move(group), std::move(outer),
                       std::move(flip)});
  }
  return catalog;
}

std::string census_csv_header() {
  return "schema,group,order_g,order_h,order_l,flip,val_gamma,val_sigma,"
         "verdict,gamma_connected,sigma_connected,gamma_locally_primitive";
}

std::string census_row_csv(const CensusRow& row) {
  std::ostringstream out;
  out << 1 << ',' << row.group_name << ',' << row.order_g << ',' << row.order_h
      << ',' << row.order_l << ',' << row.flip << ',' << row.val_gamma << ','
      << row.val_sigma << ',' << row.verdict << ',' << row.gamma_connected
      << ',' << row.sigma_connected << ',' << row.gamma_locally_primitive;
  return out.str();
}

}  // namespace symcov
