#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symcov/errors.hpp"
#include "symcov/perm.hpp"

using namespace symcov;

namespace {

Permutation random_perm(std::mt19937& rng, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("identity and basic arithmetic") {
  Permutation id(4);
  CHECK(id.is_identity());
  CHECK(id.order() == 1);
  CHECK(id.to_string() == "()");

  auto c = Permutation::from_cycles(4, {{0, 1, 2}});
  CHECK(c(0) == 1);
  CHECK(c(2) == 0);
  CHECK(c(3) == 3);
  CHECK(c.order() == 3);
  CHECK((c * c * c).is_identity());
  CHECK(c * c == c.inverse());
}

TEST_CASE("product applies left factor first") {
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  // 0 ^ (a*b): a sends 0 to 1, b sends 1 to 2
  CHECK((a * b)(0) == 2);
  CHECK((b * a)(0) == 1);
}

TEST_CASE("conjugation matches the right-action convention") {
  auto h = Permutation::from_cycles(4, {{0, 1}});
  auto g = Permutation::from_cycles(4, {{1, 2}});
  CHECK(h.conjugated_by(g) == Permutation::from_cycles(4, {{0, 2}}));
}

TEST_CASE("image validation") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), precondition_error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 3}), precondition_error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), precondition_error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), precondition_error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 5}}), precondition_error);
}

TEST_CASE("cycle decomposition round trip") {
  auto p = Permutation::from_cycles(6, {{0, 3}, {1, 4, 5}});
  auto cs = p.cycles();
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == std::vector<int>{0, 3});
  CHECK(cs[1] == std::vector<int>{1, 4, 5});
  CHECK(p.to_string() == "(0 3)(1 4 5)");
  CHECK(Permutation::from_cycles(6, cs) == p);
  CHECK(p.order() == 6);
}

TEST_CASE("conjugation preserves order on random pairs") {
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_perm(rng, 9);
    auto g = random_perm(rng, 9);
    CHECK(h.conjugated_by(g).order() == h.order());
  }
}

TEST_CASE("inverse composes to identity on random samples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_perm(rng, 12);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}
