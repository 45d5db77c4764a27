#pragma once

#include "symcov/coset_graph.hpp"
#include "symcov/graph.hpp"
#include "symcov/group.hpp"

namespace symcov {

struct PXParameters {
  int p;  // prime
  int r;  // >= 3
  int s;  // 1 <= s < r

  void validate() const;  // throws precondition_error
};

/// Z_p^r : D_2r acting faithfully on Z_r x Z_p (point (i,j) has index i*p+j).
/// Generators, in order: a_0, ..., a_{r-1}, x, y where a_k adds 1 mod p on
/// fiber k, x shifts fibers, and y maps (i,j) to (r-1-i,j).
PermutationGroup px_group(int p, int r);

/// Named generators of px_group(p, r).
Permutation px_a(int p, int r, int i);
Permutation px_x(int p, int r);
Permutation px_y(int p, int r);

/// The subgroup H_s and involution g_s:
///   s even: H_s = <a_{s/2}, ..., a_{r-s/2-1}> : <y>,  g_s = xy
///   s odd:  H_s = <a_{(s-1)/2}, ..., a_{r-(s+3)/2}> : <xy>,  g_s = y
PermutationGroup px_subgroup_Hs(int p, int r, int s);
Permutation px_flip_gs(int p, int r, int s);

/// C(p, r, s) = Cos(G, H_s, H_s g_s H_s): r*p^s vertices, valency 2p,
/// connected.
CosetGraph px_graph(int p, int r, int s);

/// The order-2p^{r-1} subgroup (<a_0 a_{r-1}> x <a_1, ..., a_{r-2}>) : <y>
/// above H_2 whose coset graph (flip xy) is the wreath graph W(r, p).
PermutationGroup px_cover_witness_subgroup(int p, int r);

/// W(r, p) = C_r[K̄_p]: r*p vertices, valency 2p.
Graph wreath_graph(int r, int p);

PermutationGroup symmetric_group(int n);
PermutationGroup alternating_group(int n);
PermutationGroup cyclic_group(int n);
/// Dihedral group of the given (even) order, acting on order/2 points.
PermutationGroup dihedral_group(int order);
/// PSL(2, p) on the projective line (p+1 points, infinity = point p), via
/// t -> t+1 and t -> -1/t.
PermutationGroup psl2(int p);

bool is_prime(int n);

}  // namespace symcov
