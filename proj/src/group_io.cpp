#include "symcov/group_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symcov/errors.hpp"

namespace symcov {

namespace {

using nlohmann::json;

Permutation permutation_from_cycles(int degree, const json& cycles) {
  if (!cycles.is_array())
    throw precondition_error("permutation spec must be an array of cycles");
  std::vector<std::vector<int>> parsed;
  for (const auto& cyc : cycles) {
    if (!cyc.is_array())
      throw precondition_error("each cycle must be an array of points");
    std::vector<int> points;
    for (const auto& pt : cyc) {
      if (!pt.is_number_integer())
        throw precondition_error("cycle entries must be integers");
      points.push_back(pt.get<int>());
    }
    parsed.push_back(std::move(points));
  }
  return Permutation::from_cycles(degree, parsed);
}

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw precondition_error("malformed JSON");
  return doc;
}

}  // namespace

PermutationGroup group_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators"))
    throw precondition_error("group spec needs degree and generators");
  if (!doc["degree"].is_number_integer())
    throw precondition_error("degree must be an integer");
  const int degree = doc["degree"].get<int>();
  if (degree < 1) throw precondition_error("degree must be positive");
  if (!doc["generators"].is_array())
    throw precondition_error("generators must be an array");
  std::vector<Permutation> gens;
  for (const auto& spec : doc["generators"])
    gens.push_back(permutation_from_cycles(degree, spec));
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw precondition_error("name must be a string");
    name = doc["name"].get<std::string>();
  }
  return PermutationGroup(degree, std::move(gens), std::move(name));
}

PermutationGroup group_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return group_from_json(buf.str());
}

std::string group_to_json(const PermutationGroup& group) {
  nlohmann::ordered_json doc;
  doc["degree"] = group.degree();
  doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : group.generators())
    doc["generators"].push_back(g.cycles());
  if (!group.name().empty()) doc["name"] = group.name();
  return doc.dump(2);
}

Permutation permutation_from_cycles_json(int degree, const std::string& text) {
  return permutation_from_cycles(degree, parse(text));
}

}  // namespace symcov
