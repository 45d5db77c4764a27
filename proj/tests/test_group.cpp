#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "symcov/caps.hpp"
#include "symcov/errors.hpp"
#include "symcov/families.hpp"
#include "symcov/group.hpp"

using namespace symcov;

TEST_CASE("orbits") {
  PermutationGroup s3(3, {Permutation::from_cycles(3, {{0, 1, 2}}),
                          Permutation::from_cycles(3, {{0, 1}})});
  CHECK(s3.orbit(0) == std::vector<int>{0, 1, 2});
  CHECK(s3.is_transitive());

  PermutationGroup pairs(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  CHECK(pairs.orbit(0) == std::vector<int>{0, 1});
  CHECK(!pairs.is_transitive());

  auto px = px_group(2, 5);
  CHECK(px.orbit(0).size() == 10);

  // orbit sizes partition the domain
  std::size_t total = 0;
  for (const auto& o : pairs.orbits()) total += o.size();
  CHECK(total == 4);
}

TEST_CASE("order and membership") {
  CHECK(PermutationGroup::trivial(5).order() == 1);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(6).order() == 720);
  CHECK(alternating_group(5).order() == 60);
  CHECK(cyclic_group(7).order() == 7);
  CHECK(dihedral_group(16).order() == 16);
  CHECK(px_group(2, 5).order() == 320);
  CHECK(px_group(3, 4).order() == 648);
  CHECK(psl2(17).order() == 2448);

  PermutationGroup z3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(z3.contains(Permutation::from_cycles(3, {{0, 2, 1}})));
  CHECK(!z3.contains(Permutation::from_cycles(3, {{0, 1}})));

  // a_0 moves fiber 0; H_3 of px(2,5) is generated away from it
  CHECK(!px_subgroup_Hs(2, 5, 3).contains(px_a(2, 5, 0)));
}

TEST_CASE("element enumeration is exact and deterministic") {
  auto s4 = symmetric_group(4);
  auto els = s4.elements();
  CHECK(els.size() == 24);
  CHECK(std::set<Permutation>(els.begin(), els.end()).size() == 24);
  CHECK(els.front().is_identity());
  CHECK(els == s4.elements());

  // order oracle agrees with enumeration for every group under 1e5 here
  for (const auto& g : {px_group(2, 5), px_group(3, 3), psl2(13)})
    CHECK(g.order() == g.elements().size());
}

TEST_CASE("element cap") {
  auto saved = Caps::max_elements;
  Caps::max_elements = 10;
  CHECK_THROWS_AS((void)symmetric_group(4).elements(), capacity_error);
  Caps::max_elements = saved;
}

TEST_CASE("intersection") {
  PermutationGroup a(3, {Permutation::from_cycles(3, {{0, 1}})});
  PermutationGroup b(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(intersect(a, b).is_trivial());

  auto h3 = px_subgroup_Hs(2, 5, 3);
  auto g3 = px_flip_gs(2, 5, 3);
  CHECK(intersect(h3, conjugate_subgroup(h3, g3)).order() == 2);

  // |H_s ∩ H_s^g| = p^{r-s-1} across instances
  for (auto [p, r, s] : {std::array<int, 3>{2, 6, 3}, {3, 4, 2}, {2, 4, 1}}) {
    auto h = px_subgroup_Hs(p, r, s);
    auto inner = intersect(h, conjugate_subgroup(h, px_flip_gs(p, r, s)));
    std::uint64_t expect = 1;
    for (int i = 0; i < r - s - 1; ++i) expect *= p;
    CHECK(inner.order() == expect);
  }

  // H_2 ∩ T^{g_2} = H_2 ∩ H_2^{g_2}
  auto h2 = px_subgroup_Hs(2, 5, 2);
  auto g2 = px_flip_gs(2, 5, 2);
  auto t = px_cover_witness_subgroup(2, 5);
  CHECK(intersect(h2, conjugate_subgroup(t, g2))
            .same_group_as(intersect(h2, conjugate_subgroup(h2, g2))));
}

TEST_CASE("conjugate subgroup") {
  PermutationGroup h(3, {Permutation::from_cycles(3, {{0, 1}})});
  auto conj = conjugate_subgroup(h, Permutation::from_cycles(3, {{1, 2}}));
  CHECK(conj.contains(Permutation::from_cycles(3, {{0, 2}})));
  CHECK(conj.order() == 2);

  std::mt19937 rng(20240902);
  auto s5 = symmetric_group(5);
  auto els = s5.elements();
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    PermutationGroup sub(5, {els[pick(rng)], els[pick(rng)]});
    auto image = conjugate_subgroup(sub, els[pick(rng)]);
    CHECK(image.order() == sub.order());
  }
}

TEST_CASE("core") {
  auto s4 = symmetric_group(4);
  PermutationGroup s3(4, {Permutation::from_cycles(4, {{0, 1}}),
                          Permutation::from_cycles(4, {{0, 1, 2}})});
  CHECK(core(s4, s3).is_trivial());
  CHECK(core(s4, s4).same_group_as(s4));
  CHECK(core(px_group(2, 4), px_subgroup_Hs(2, 4, 2)).is_trivial());

  // normality of the core, checked on generators
  PermutationGroup d8 = dihedral_group(8);
  PermutationGroup sub(4, {Permutation::from_cycles(4, {{0, 2}, {1, 3}}),
                           Permutation::from_cycles(4, {{1, 3}})});
  auto c = core(d8, sub);
  CHECK(c.order() == 4);  // index-2 subgroups are normal
  CHECK(core(d8, PermutationGroup(4, {Permutation::from_cycles(4, {{1, 3}})}))
            .is_trivial());
  for (const auto& t : d8.generators())
    for (const auto& x : c.generators()) CHECK(c.contains(x.conjugated_by(t)));
}

TEST_CASE("right transversal satisfies Lagrange") {
  auto s4 = symmetric_group(4);
  PermutationGroup s3(4, {Permutation::from_cycles(4, {{0, 1}}),
                          Permutation::from_cycles(4, {{0, 1, 2}})});
  auto reps = right_transversal(s4, s3);
  CHECK(reps.size() == 4);
  CHECK(reps.front().is_identity());
  std::set<std::vector<int>> keys;
  for (const auto& t : reps) keys.insert(coset_key(s3, t));
  CHECK(keys.size() == 4);
  CHECK(s4.order() == reps.size() * s3.order());
}

TEST_CASE("coset keys identify cosets") {
  PermutationGroup h(4, {Permutation::from_cycles(4, {{0, 1}})});
  auto x = Permutation::from_cycles(4, {{2, 3}});
  CHECK(coset_key(h, x) == coset_key(h, Permutation::from_cycles(4, {{0, 1}}) * x));
  CHECK(coset_key(h, x) != coset_key(h, Permutation(4)));
}

TEST_CASE("double cosets") {
  auto s4 = symmetric_group(4);
  PermutationGroup s3(4, {Permutation::from_cycles(4, {{0, 1}}),
                          Permutation::from_cycles(4, {{0, 1, 2}})});
  CHECK(double_coset_cosets(s3, Permutation::from_cycles(4, {{2, 3}}), s4).size() == 3);
  CHECK(double_coset_cosets(s4, Permutation::from_cycles(4, {{0, 1}}), s4).size() == 1);

  auto g = px_group(2, 5);
  CHECK(double_coset_cosets(px_subgroup_Hs(2, 5, 1), px_flip_gs(2, 5, 1), g).size() == 4);

  // size law |h : h ∩ h^g| on random flips
  std::mt19937 rng(5);
  auto els = g.elements();
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  auto h = px_subgroup_Hs(2, 5, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& x = els[pick(rng)];
    auto n = double_coset_cosets(h, x, g).size();
    CHECK(n == h.order() / intersect(h, conjugate_subgroup(h, x)).order());
  }
}

TEST_CASE("primitivity") {
  CHECK(!is_primitive(cyclic_group(4)));
  CHECK(is_primitive(symmetric_group(4)));
  CHECK(is_primitive(PermutationGroup(3, {Permutation::from_cycles(3, {{0, 1, 2}})})));
  CHECK(!is_primitive(dihedral_group(8)));
  CHECK(is_primitive(psl2(5)));
}

TEST_CASE("join and adjoin") {
  PermutationGroup a(4, {Permutation::from_cycles(4, {{0, 1}})});
  PermutationGroup b(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(join(a, b).order() == 24);
  CHECK(adjoin(a, Permutation::from_cycles(4, {{2, 3}})).order() == 4);
}

TEST_CASE("all_subgroups of S3") {
  PermutationGroup s3(3, {Permutation::from_cycles(3, {{0, 1, 2}}),
                          Permutation::from_cycles(3, {{0, 1}})});
  auto subs = all_subgroups(s3);
  CHECK(subs.size() == 6);  // 1, three Z2, Z3, S3
  CHECK(subs.front().order() == 1);
  CHECK(subs.back().order() == 6);
  for (const auto& s : subs) CHECK(s.is_subgroup_of(s3));
}

TEST_CASE("from_elements reduces generators") {
  auto s4 = symmetric_group(4);
  auto rebuilt = PermutationGroup::from_elements(4, s4.elements());
  CHECK(rebuilt.order() == 24);
  CHECK(rebuilt.generators().size() <= 4);
}

TEST_CASE("action image homomorphism and kernel") {
  auto cg = px_graph(2, 6, 3);
  auto action = cg.local_action();
  const auto& h = cg.point_stabilizer();
  // homomorphism spot check on generator pairs
  for (const auto& a : h.generators())
    for (const auto& b : h.generators())
      CHECK(action.image_of(a * b) == action.image_of(a) * action.image_of(b));
  auto image = action.image_group();
  auto kernel = action_kernel(h, action);
  CHECK(image.order() * kernel.order() == h.order());
  CHECK(kernel.order() == 2);
}
