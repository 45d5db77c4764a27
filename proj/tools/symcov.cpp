#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symcov/caps.hpp"
#include "symcov/census.hpp"
#include "symcov/errors.hpp"
#include "symcov/extender.hpp"
#include "symcov/families.hpp"
#include "symcov/group_io.hpp"
#include "symcov/tetra.hpp"

namespace {

using symcov::CosetGraph;
using symcov::Permutation;
using symcov::PermutationGroup;

// spec ingestion failures exit with code 2, domain precondition failures with 3
struct spec_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto parsing(F&& f) {
  try {
    return f();
  } catch (const symcov::precondition_error& e) {
    throw spec_error(e.what());
  }
}

struct SigmaArgs {
  int p = 0, r = 0, s = 0;
  std::string group_file, outer, flip;

  void attach(CLI::App* cmd, bool need_px = false) {
    auto* px = cmd->add_option("--p", p, "prime for the p-power family");
    cmd->add_option("--r", r, "cycle length parameter")->needs(px);
    cmd->add_option("--s", s, "subgroup depth parameter")->needs(px);
    auto* gf = cmd->add_option("--group", group_file, "group-spec JSON file");
    cmd->add_option("--outer", outer, "JSON list of generator cycle lists for H")
        ->needs(gf);
    cmd->add_option("--flip", flip, "JSON cycle list for g")->needs(gf);
    if (need_px) gf->excludes(px);
  }

  bool has_px() const { return p != 0; }

  CosetGraph build() const {
    if (has_px()) return symcov::px_graph(p, r, s);
    if (group_file.empty())
      throw spec_error("give either --p/--r/--s or --group/--outer/--flip");
    auto g = parsing([&] { return symcov::group_from_json_file(group_file); });
    auto h = parsing([&] { return parse_subgroup(g, outer); });
    auto fl =
        parsing([&] { return symcov::permutation_from_cycles_json(g.degree(), flip); });
    return CosetGraph(std::move(g), std::move(h), std::move(fl));
  }

  static PermutationGroup parse_subgroup(const PermutationGroup& g,
                                         const std::string& text) {
    auto doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array())
      throw symcov::precondition_error("subgroup must be a JSON list of permutations");
    std::vector<Permutation> gens;
    for (const auto& spec : doc)
      gens.push_back(symcov::permutation_from_cycles_json(g.degree(), spec.dump()));
    return PermutationGroup(g.degree(), std::move(gens));
  }
};

nlohmann::ordered_json report_json(const symcov::ClassificationReport& rep) {
  return nlohmann::ordered_json::parse(rep.to_json());
}

nlohmann::ordered_json perm_json(const Permutation& p) {
  return nlohmann::ordered_json(p.cycles());
}

symcov::ExportFormat parse_format(const std::string& fmt) {
  if (fmt == "dot") return symcov::ExportFormat::Dot;
  if (fmt == "json") return symcov::ExportFormat::Json;
  throw spec_error("unknown export format: " + fmt);
}

int cmd_px(int p, int r, int s, std::optional<int> classify_over,
           bool cover_witness, const std::string& export_fmt) {
  auto sigma = symcov::px_graph(p, r, s);
  if (!export_fmt.empty()) {
    std::cout << export_graph(sigma.graph(), parse_format(export_fmt));
    return 0;
  }
  nlohmann::ordered_json out;
  out["schema"] = 1;
  out["family"] = "px";
  out["p"] = p;
  out["r"] = r;
  out["s"] = s;
  out["vertices"] = sigma.vertex_count();
  out["valency"] = sigma.valency();
  out["connected"] = sigma.is_connected();
  if (classify_over) {
    if ((*classify_over - s) % 2 != 0)
      throw symcov::precondition_error(
          "classify-over requires matching parity (shared flip)");
    auto pair = symcov::build_pair(
        sigma.group(), sigma.point_stabilizer(),
        symcov::px_subgroup_Hs(p, r, *classify_over), sigma.flip());
    out["over_s"] = *classify_over;
    out["report"] = report_json(symcov::classify(pair));
  } else if (cover_witness) {
    auto pair = symcov::build_pair(sigma.group(), sigma.point_stabilizer(),
                                   symcov::px_cover_witness_subgroup(p, r),
                                   sigma.flip());
    out["over"] = "cover-witness";
    out["report"] = report_json(symcov::classify(pair));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_classify(const SigmaArgs& args, const std::string& inner) {
  auto sigma = args.build();
  auto l = parsing([&] { return SigmaArgs::parse_subgroup(sigma.group(), inner); });
  auto pair = symcov::build_pair(sigma.group(), l, sigma.point_stabilizer(),
                                 sigma.flip());
  std::cout << report_json(symcov::classify(pair)).dump(2) << "\n";
  return 0;
}

int cmd_tetra(const SigmaArgs& args) {
  auto sigma = args.build();
  nlohmann::ordered_json out;
  out["schema"] = 1;
  out["sigma_vertices"] = sigma.vertex_count();
  auto feasible = symcov::can_have_connected_pseudocover(sigma);
  out["feasible"] = feasible.possible;
  if (!feasible.possible) {
    out["reason"] = feasible.reason;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  auto data = symcov::analyze_stabilizer(sigma);
  out["stabilizer_order"] = data.vertex_stab.order();
  out["edge_kernel_order"] = data.edge_kernel.order();
  out["x"] = perm_json(*data.x);
  out["y"] = perm_json(*data.y);
  out["normalized_flip"] = perm_json(*data.normalized_flip);
  auto [pair, rep] = symcov::construct_pseudocover(sigma);
  auto lift_gens = nlohmann::ordered_json::array();
  for (const auto& g : pair.gamma.point_stabilizer().generators())
    lift_gens.push_back(perm_json(g));
  out["lift_generators"] = std::move(lift_gens);
  out["gamma_vertices"] = pair.gamma.vertex_count();
  out["report"] = report_json(rep);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_census(const std::string& catalog_file, bool with_psl2,
               std::size_t order_cap) {
  auto catalog = catalog_file.empty()
                     ? symcov::default_catalog(with_psl2)
                     : parsing([&] { return symcov::catalog_from_json_file(catalog_file); });
  std::cout << symcov::census_csv_header() << "\n";
  for (const auto& row : symcov::run_census(catalog, order_cap))
    std::cout << symcov::census_row_csv(row) << "\n";
  return 0;
}

int cmd_disconnected(const SigmaArgs& args, const std::string& export_fmt) {
  auto sigma = args.build();
  auto result = symcov::disconnected_pseudocover(
      sigma.group(), sigma.point_stabilizer(), sigma.flip());
  if (!export_fmt.empty()) {
    std::cout << export_graph(result.graph, parse_format(export_fmt));
    return 0;
  }
  nlohmann::ordered_json out;
  out["schema"] = 1;
  out["sigma_vertices"] = sigma.vertex_count();
  out["delta_vertices"] = result.graph.vertex_count();
  out["components"] =
      symcov::connected_components(result.graph).size();
  out["report"] = report_json(result.report);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_export(const SigmaArgs& args, const std::string& fmt) {
  auto sigma = args.build();
  std::cout << export_graph(sigma.graph(), parse_format(fmt));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coset graphs, quotients, and cover/pseudocover classification"};
  app.require_subcommand(1);

  std::size_t max_elements = symcov::Caps::max_elements;
  std::size_t max_vertices = symcov::Caps::max_vertices;
  if (const char* env = std::getenv("SYMCOV_MAX_ELEMENTS"))
    max_elements = std::strtoull(env, nullptr, 10);
  app.add_option("--max-elements", max_elements,
                 "cap on enumerated group elements");
  app.add_option("--max-vertices", max_vertices, "cap on graph vertices");

  int p = 0, r = 0, s = 0;
  std::optional<int> classify_over;
  bool cover_witness = false;
  std::string px_export;
  auto* px = app.add_subcommand("px", "build and classify a p-power family graph");
  px->add_option("--p", p, "prime")->required();
  px->add_option("--r", r, "cycle length")->required();
  px->add_option("--s", s, "subgroup depth")->required();
  px->add_option("--classify-over", classify_over,
                 "classify over the graph at this depth (same parity)");
  px->add_flag("--cover-witness", cover_witness,
               "classify over the wreath-graph witness subgroup");
  px->add_option("--export", px_export, "emit the graph as dot or json");

  SigmaArgs classify_args;
  std::string inner;
  auto* classify = app.add_subcommand("classify", "classify an extender pair");
  classify_args.attach(classify);
  classify->add_option("--inner", inner, "JSON generator list for L")->required();

  SigmaArgs tetra_args;
  auto* tetra =
      app.add_subcommand("tetra", "tetravalent pseudocover construction pipeline");
  tetra_args.attach(tetra);

  std::string catalog_file;
  bool with_psl2 = false;
  std::size_t order_cap = 512;
  auto* census = app.add_subcommand("census", "classify all cataloged pairs as CSV");
  census->add_option("--catalog", catalog_file, "catalog JSON file");
  census->add_flag("--psl2", with_psl2,
                   "include the PSL(2,17) witness in the built-in catalog");
  census->add_option("--subgroup-order-cap", order_cap,
                     "skip subgroups above this order");

  SigmaArgs disc_args;
  std::string disc_export;
  auto* disconnected =
      app.add_subcommand("disconnected", "disconnected pseudocover by blow-up");
  disc_args.attach(disconnected);
  disconnected->add_option("--export", disc_export, "emit the blow-up as dot or json");

  SigmaArgs export_args;
  std::string export_fmt = "dot";
  auto* exporter = app.add_subcommand("export", "emit a coset graph as dot or json");
  export_args.attach(exporter);
  exporter->add_option("--format", export_fmt, "dot or json");

  CLI11_PARSE(app, argc, argv);

  symcov::Caps::max_elements = max_elements;
  symcov::Caps::max_vertices = max_vertices;

  try {
    if (px->parsed())
      return cmd_px(p, r, s, classify_over, cover_witness, px_export);
    if (classify->parsed()) return cmd_classify(classify_args, inner);
    if (tetra->parsed()) return cmd_tetra(tetra_args);
    if (census->parsed()) return cmd_census(catalog_file, with_psl2, order_cap);
    if (disconnected->parsed()) return cmd_disconnected(disc_args, disc_export);
    if (exporter->parsed()) return cmd_export(export_args, export_fmt);
  } catch (const spec_error& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const symcov::precondition_error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const symcov::capacity_error& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
