#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "symcov/census.hpp"
#include "symcov/errors.hpp"
#include "symcov/families.hpp"
#include "symcov/group_io.hpp"

using namespace symcov;

TEST_CASE("group spec round trip") {
  auto g = group_from_json(R"({
    "degree": 4,
    "generators": [[[0,1]], [[0,1,2,3]]],
    "name": "S4"
  })");
  CHECK(g.degree() == 4);
  CHECK(g.order() == 24);
  CHECK(g.name() == "S4");

  auto again = group_from_json(group_to_json(g));
  CHECK(again.same_group_as(g));
  CHECK(again.name() == "S4");
}

TEST_CASE("malformed specs are rejected") {
  CHECK_THROWS_AS(group_from_json("not json"), precondition_error);
  CHECK_THROWS_AS(group_from_json("{}"), precondition_error);
  CHECK_THROWS_AS(group_from_json(R"({"degree": 0, "generators": []})"),
                  precondition_error);
  CHECK_THROWS_AS(group_from_json(R"({"degree": 3, "generators": [[[0,5]]]})"),
                  precondition_error);
  CHECK_THROWS_AS(group_from_json(R"({"degree": 3, "generators": [[[0,"x"]]]})"),
                  precondition_error);
  CHECK_THROWS_AS(group_from_json_file("/nonexistent/path.json"), precondition_error);
}

TEST_CASE("permutation from cycles json") {
  auto p = permutation_from_cycles_json(5, "[[0,1],[2,3,4]]");
  CHECK(p == Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}}));
  CHECK(permutation_from_cycles_json(5, "[]").is_identity());
  CHECK_THROWS_AS(permutation_from_cycles_json(5, "{"), precondition_error);
}

TEST_CASE("census catalog from file") {
  const char* path = "catalog_test.json";
  {
    std::ofstream out(path);
    out << R"([
      {"name": "px-small", "family": "px", "p": 2, "r": 3, "s": 1},
      {"name": "k4",
       "group": {"degree": 4, "generators": [[[0,1]], [[0,1,2,3]]]},
       "outer": [[[0,1]], [[0,1,2]]],
       "flip": [[2,3]]}
    ])";
  }
  auto catalog = catalog_from_json_file(path);
  REQUIRE(catalog.size() == 2);
  CHECK(catalog[0].name == "px-small");
  CHECK(catalog[0].group.order() == 48);
  CHECK(catalog[1].outer.order() == 6);

  auto rows = run_census(catalog);
  CHECK(!rows.empty());
  for (const auto& row : rows) {
    CHECK((row.verdict == "cover" || row.verdict == "pseudocover" ||
           row.verdict == "multicover-only" || row.verdict == "valency-mismatch"));
    CHECK(row.order_l < row.order_h);
  }
  std::remove(path);
}

TEST_CASE("census csv is deterministic") {
  auto catalog = default_catalog(false);
  auto rows = run_census(catalog);
  auto rows2 = run_census(catalog);
  REQUIRE(rows.size() == rows2.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    CHECK(census_row_csv(rows[i]) == census_row_csv(rows2[i]));
  CHECK(census_csv_header().substr(0, 6) == "schema");
}
