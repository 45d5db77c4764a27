#include "symcov/families.hpp"

#include <numeric>
#include <string>

#include "symcov/errors.hpp"

namespace symcov {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void PXParameters::validate() const {
  if (!is_prime(p)) throw precondition_error("p must be prime");
  if (r < 3) throw precondition_error("r must be at least 3");
  if (s < 1 || s >= r) throw precondition_error("s must satisfy 1 <= s < r");
}

namespace {

// point (i, j) in Z_r x Z_p has index i*p + j
int px_index(int p, int r, int i, int j) {
  return ((i % r + r) % r) * p + ((j % p + p) % p);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

void check_px(int p, int r) {
  if (!is_prime(p)) throw precondition_error("p must be prime");
  if (r < 3) throw precondition_error("r must be at least 3");
}

}  // namespace

Permutation px_a(int p, int r, int k) {
  check_px(p, r);
  std::vector<int> img(r * p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < p; ++j)
      img[px_index(p, r, i, j)] = px_index(p, r, i, i == k ? j + 1 : j);
  return Permutation(std::move(img));
}

Permutation px_x(int p, int r) {
  check_px(p, r);
  std::vector<int> img(r * p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < p; ++j) img[px_index(p, r, i, j)] = px_index(p, r, i + 1, j);
  return Permutation(std::move(img));
}

Permutation px_y(int p, int r) {
  check_px(p, r);
  std::vector<int> img(r * p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < p; ++j)
      img[px_index(p, r, i, j)] = px_index(p, r, r - 1 - i, j);
  return Permutation(std::move(img));
}

PermutationGroup px_group(int p, int r) {
  check_px(p, r);
  std::vector<Permutation> gens;
  for (int k = 0; k < r; ++k) gens.push_back(px_a(p, r, k));
  gens.push_back(px_x(p, r));
  gens.push_back(px_y(p, r));
  PermutationGroup g(r * p, std::move(gens),
                     "px(" + std::to_string(p) + "," + std::to_string(r) + ")");
  if (g.order() != ipow(p, r) * 2 * r)
    throw consistency_error("px group order disagrees with p^r * 2r");
  return g;
}

PermutationGroup px_subgroup_Hs(int p, int r, int s) {
  PXParameters{p, r, s}.validate();
  std::vector<Permutation> gens;
  int lo, hi;  // a_i for lo <= i < hi
  if (s % 2 == 0) {
    lo = s / 2;
    hi = r - s / 2;
  } else {
    lo = (s - 1) / 2;
    hi = r - (s + 1) / 2;
  }
  for (int i = lo; i < hi; ++i) gens.push_back(px_a(p, r, i));
  gens.push_back(s % 2 == 0 ? px_y(p, r) : px_x(p, r) * px_y(p, r));
  PermutationGroup h(r * p, std::move(gens),
                     "H" + std::to_string(s));
  if (h.order() != 2 * ipow(p, r - s))
    throw consistency_error("|H_s| disagrees with 2 p^{r-s}");
  return h;
}

Permutation px_flip_gs(int p, int r, int s) {
  PXParameters{p, r, s}.validate();
  return s % 2 == 0 ? px_x(p, r) * px_y(p, r) : px_y(p, r);
}

CosetGraph px_graph(int p, int r, int s) {
  PXParameters{p, r, s}.validate();
  auto g = px_group(p, r);
  CosetGraph cg(g, px_subgroup_Hs(p, r, s), px_flip_gs(p, r, s));
  if (static_cast<std::uint64_t>(cg.vertex_count()) != r * ipow(p, s))
    throw consistency_error("C(p,r,s) vertex count disagrees with r p^s");
  if (cg.valency() != 2 * p)
    throw consistency_error("C(p,r,s) valency disagrees with 2p");
  // the translation subgroup meets the vertex stabilizer, so the action
  // of the elementary abelian part is not semiregular
  std::vector<Permutation> a_gens;
  for (int k = 0; k < r; ++k) a_gens.push_back(px_a(p, r, k));
  PermutationGroup m(r * p, std::move(a_gens));
  if (intersect(m, cg.point_stabilizer()).is_trivial())
    throw consistency_error("translation subgroup misses the vertex stabilizer");
  return cg;
}

PermutationGroup px_cover_witness_subgroup(int p, int r) {
  check_px(p, r);
  std::vector<Permutation> gens;
  gens.push_back(px_a(p, r, 0) * px_a(p, r, r - 1));
  for (int i = 1; i <= r - 2; ++i) gens.push_back(px_a(p, r, i));
  gens.push_back(px_y(p, r));
  PermutationGroup t(r * p, std::move(gens), "T-witness");
  if (t.order() != 2 * ipow(p, r - 1))
    throw consistency_error("cover witness order disagrees with 2 p^{r-1}");
  return t;
}

Graph wreath_graph(int r, int p) {
  if (r < 3) throw precondition_error("wreath graph needs r >= 3");
  if (p < 1) throw precondition_error("wreath graph needs p >= 1");
  return lexicographic_blowup(Graph::cycle(r), p).first;
}

PermutationGroup symmetric_group(int n) {
  if (n < 1) throw precondition_error("symmetric group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {full}));
  }
  return PermutationGroup(n, std::move(gens), "S" + std::to_string(n));
}

PermutationGroup alternating_group(int n) {
  if (n < 3) return PermutationGroup::trivial(n < 1 ? 1 : n);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<int> cyc;
    for (int i = n % 2 == 0 ? 1 : 0; i < n; ++i) cyc.push_back(i);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermutationGroup(n, std::move(gens), "A" + std::to_string(n));
}

PermutationGroup cyclic_group(int n) {
  if (n < 1) throw precondition_error("cyclic group needs n >= 1");
  std::vector<int> full(n);
  std::iota(full.begin(), full.end(), 0);
  return PermutationGroup(n, {Permutation::from_cycles(n, {full})},
                          "Z" + std::to_string(n));
}

PermutationGroup dihedral_group(int order) {
  if (order < 4 || order % 2 != 0)
    throw precondition_error("dihedral group order must be even and >= 4");
  const int n = order / 2;
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  PermutationGroup d(n, {Permutation(rot), Permutation(refl)},
                     "D" + std::to_string(order));
  if (d.order() != static_cast<std::uint64_t>(order))
    throw consistency_error("dihedral group order mismatch");
  return d;
}

PermutationGroup psl2(int p) {
  if (!is_prime(p) || p < 5)
    throw precondition_error("psl2 needs an odd prime p >= 5");
  const int n = p + 1;  // projective line, infinity = point p
  std::vector<int> shift(n), inv(n);
  for (int t = 0; t < p; ++t) shift[t] = (t + 1) % p;
  shift[p] = p;
  // t -> -1/t; 0 <-> infinity
  auto modinv = [&](int a) {
    int result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  inv[0] = p;
  inv[p] = 0;
  for (int t = 1; t < p; ++t) inv[t] = (p - modinv(t)) % p;
  PermutationGroup g(n, {Permutation(shift), Permutation(inv)},
                     "PSL(2," + std::to_string(p) + ")");
  const std::uint64_t expected =
      static_cast<std::uint64_t>(p) * (static_cast<std::uint64_t>(p) * p - 1) / 2;
  if (g.order() != expected)
    throw consistency_error("psl2 order disagrees with p(p^2-1)/2");
  return g;
}

}  // namespace symcov
