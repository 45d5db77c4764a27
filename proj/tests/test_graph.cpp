#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symcov/errors.hpp"
#include "symcov/graph.hpp"

using namespace symcov;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& map) {
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(map[u], map[v]);
  return out;
}

Graph octahedron() {
  // K_{2,2,2}: complete minus a perfect matching
  Graph g(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3 || u >= 3) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("basic graph container") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // deduped
  g.add_edge(1, 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), precondition_error);
  CHECK(Graph::cycle(5).edge_count() == 5);
  CHECK(Graph::complete(4).edge_count() == 6);
}

TEST_CASE("block partition validation") {
  CHECK_THROWS_AS(BlockPartition::from_blocks(4, {{0, 1}, {2}}), precondition_error);
  CHECK_THROWS_AS(BlockPartition::from_blocks(4, {{0, 1}, {1, 2}}), precondition_error);
  auto b = BlockPartition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(b.block_of[2] == 0);
  CHECK(b.block_of[3] == 1);
}

TEST_CASE("quotient graph") {
  auto c6 = Graph::cycle(6);
  auto antipodal = BlockPartition::from_blocks(6, {{0, 3}, {1, 4}, {2, 5}});
  auto q = quotient_graph(c6, antipodal);
  CHECK(are_isomorphic(q, Graph::cycle(3)));

  // singleton partition is the identity
  auto singles = BlockPartition::from_blocks(6, {{0}, {1}, {2}, {3}, {4}, {5}});
  CHECK(are_isomorphic(quotient_graph(c6, singles), c6));

  // quotient valency never exceeds the original
  auto vq = is_regular(q);
  REQUIRE(vq);
  CHECK(*vq <= 2);
}

TEST_CASE("induced bipartite and matching tests") {
  Graph g(4);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(0, 1);  // intra-block for blocks {0,1},{2,3}
  auto induced = induced_bipartite(g, {0, 1}, {2, 3});
  CHECK(induced.intra_block_edges == 1);
  CHECK(induced.graph.edge_count() == 2);
  CHECK(is_perfect_matching_between(g, {0, 1}, {2, 3}));
  CHECK(*is_regular(induced.graph) == 1);
  CHECK_THROWS_AS(induced_bipartite(g, {0, 1}, {1, 2}), precondition_error);
}

TEST_CASE("regularity") {
  CHECK(*is_regular(Graph::cycle(4)) == 2);
  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(!is_regular(star));
}

TEST_CASE("connected components") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  auto comps = connected_components(g);
  CHECK(comps.size() == 3);
  CHECK(connected_components(Graph::cycle(4)).size() == 1);
}

TEST_CASE("lexicographic blowup") {
  auto [k33, fibers] = lexicographic_blowup(Graph::complete(2), 3);
  CHECK(k33.vertex_count() == 6);
  CHECK(k33.edge_count() == 9);
  CHECK(fibers.block_count() == 2);

  auto c4 = Graph::cycle(4);
  auto [big, blocks] = lexicographic_blowup(c4, 2);
  CHECK(big.vertex_count() == 2 * 4);
  CHECK(big.edge_count() == 4 * 4);
  CHECK(are_isomorphic(lexicographic_blowup(c4, 1).first, c4));
}

TEST_CASE("isomorphism") {
  CHECK(!are_isomorphic(Graph::cycle(6), lexicographic_blowup(Graph::complete(2), 3).first));
  CHECK(!are_isomorphic(Graph::cycle(6), Graph::cycle(5)));
  CHECK(are_isomorphic(octahedron(), lexicographic_blowup(Graph::cycle(3), 2).first));

  std::mt19937 rng(20240903);
  auto base = lexicographic_blowup(Graph::cycle(5), 2).first;
  std::vector<int> map(base.vertex_count());
  for (int i = 0; i < base.vertex_count(); ++i) map[i] = i;
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(map.begin(), map.end(), rng);
    CHECK(are_isomorphic(base, relabel(base, map)));
  }
  // equivalence relation sampling: symmetric and transitive through relabelings
  std::shuffle(map.begin(), map.end(), rng);
  auto b2 = relabel(base, map);
  std::shuffle(map.begin(), map.end(), rng);
  auto b3 = relabel(b2, map);
  CHECK(are_isomorphic(b2, base));
  CHECK(are_isomorphic(base, b3));
}

TEST_CASE("isomorphism distinguishes same degree sequence") {
  // C6 vs 2xC3: both 2-regular on 6 vertices
  Graph two_triangles(6);
  for (int b : {0, 3})
    for (int i = 0; i < 3; ++i) two_triangles.add_edge(b + i, b + (i + 1) % 3);
  CHECK(!are_isomorphic(Graph::cycle(6), two_triangles));
}

TEST_CASE("export formats are deterministic") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto dot = export_graph(g, ExportFormat::Dot);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  auto json = export_graph(g, ExportFormat::Json);
  CHECK(json.find("\"edges\"") != std::string::npos);
  CHECK(dot == export_graph(g, ExportFormat::Dot));
}
