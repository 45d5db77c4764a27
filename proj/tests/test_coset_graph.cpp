#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcov/caps.hpp"
#include "symcov/coset_graph.hpp"
#include "symcov/errors.hpp"
#include "symcov/families.hpp"

using namespace symcov;

namespace {

PermutationGroup s3_in_s4() {
  return PermutationGroup(4, {Permutation::from_cycles(4, {{0, 1}}),
                              Permutation::from_cycles(4, {{0, 1, 2}})},
                          "S3");
}

}  // namespace

TEST_CASE("complete graph from point stabilizer") {
  auto cg = CosetGraph(symmetric_group(4), s3_in_s4(),
                       Permutation::from_cycles(4, {{2, 3}}));
  CHECK(cg.vertex_count() == 4);
  CHECK(cg.valency() == 3);
  CHECK(are_isomorphic(cg.graph(), Graph::complete(4)));
  CHECK(cg.is_connected());
  CHECK(cg.is_faithful());
  CHECK(cg.is_locally_primitive());
  CHECK(cg.verify_arc_transitive());
}

TEST_CASE("cube from the rotation subgroup") {
  PermutationGroup z3(4, {Permutation::from_cycles(4, {{0, 1, 2}})});
  auto cg = CosetGraph(symmetric_group(4), z3, Permutation::from_cycles(4, {{0, 3}}));
  CHECK(cg.vertex_count() == 8);
  CHECK(cg.valency() == 3);
  CHECK(cg.is_connected());
  CHECK(cg.is_locally_primitive());
  // the cube is bipartite, K4 is not
  CHECK(!are_isomorphic(cg.graph(), Graph::complete(4)));
}

TEST_CASE("wreath graph as coset graph") {
  auto cg = CosetGraph(px_group(2, 5), px_subgroup_Hs(2, 5, 1), px_flip_gs(2, 5, 1));
  CHECK(cg.vertex_count() == 10);
  CHECK(cg.valency() == 4);
  CHECK(are_isomorphic(cg.graph(), wreath_graph(5, 2)));
}

TEST_CASE("preconditions") {
  auto s4 = symmetric_group(4);
  auto h = s3_in_s4();
  CHECK_THROWS_AS(CosetGraph(s4, h, Permutation::from_cycles(4, {{0, 1}})),
                  precondition_error);  // flip inside H
  CHECK_THROWS_AS(CosetGraph(s4, h, Permutation::from_cycles(4, {{0, 2, 3}})),
                  precondition_error);  // flip^2 outside H
  PermutationGroup foreign(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK_THROWS_AS(CosetGraph(alternating_group(4), foreign,
                             Permutation::from_cycles(4, {{2, 3}})),
                  precondition_error);
}

TEST_CASE("vertex bookkeeping") {
  auto cg = CosetGraph(symmetric_group(4), s3_in_s4(),
                       Permutation::from_cycles(4, {{2, 3}}));
  CHECK(cg.vertex_of(Permutation(4)) == 0);
  CHECK(cg.vertex_of(cg.flip()) == 1);
  CHECK(cg.coset_reps()[1] == cg.flip());
  CHECK(cg.vertex_count() * static_cast<int>(cg.point_stabilizer().order()) ==
        static_cast<int>(cg.group().order()));
  // right action on cosets is a graph automorphism
  for (const auto& s : cg.group().generators()) {
    auto perm = cg.vertex_permutation(s);
    for (auto [u, v] : cg.graph().edges()) CHECK(cg.graph().adjacent(perm(u), perm(v)));
  }
}

TEST_CASE("local action and kernel sizes") {
  auto cg = px_graph(2, 6, 3);
  auto action = cg.local_action();
  CHECK(action.domain_size == 4);
  CHECK(action.image_group().order() == 8);
  CHECK(action_kernel(cg.point_stabilizer(), action).order() == 2);
  CHECK(!cg.is_locally_primitive());
  CHECK(!px_graph(2, 5, 3).is_locally_primitive());
}

TEST_CASE("arc stabilizer") {
  auto cg = px_graph(2, 5, 3);
  auto arc = cg.arc_stabilizer();
  CHECK(arc.order() == 2);
  CHECK(arc.is_subgroup_of(cg.point_stabilizer()));
}

TEST_CASE("disconnected coset graph") {
  // L too small to generate G together with the flip
  auto g = px_group(2, 4);
  PermutationGroup l(8, {px_a(2, 4, 1)});
  auto flip = px_flip_gs(2, 4, 2);
  CosetGraph cg(g, l, flip);
  CHECK(!cg.is_connected());
  CHECK(cg.verify_arc_transitive());
}

TEST_CASE("vertex cap") {
  auto saved = Caps::max_vertices;
  Caps::max_vertices = 5;
  CHECK_THROWS_AS(CosetGraph(symmetric_group(4),
                             PermutationGroup(4, {Permutation::from_cycles(4, {{0, 1, 2}})}),
                             Permutation::from_cycles(4, {{0, 3}})),
                  capacity_error);
  Caps::max_vertices = saved;
}
