#pragma once

#include <map>
#include <memory>
#include <vector>

#include "symcov/graph.hpp"
#include "symcov/group.hpp"

namespace symcov {

/// Cos(G, H, HgH): vertices are the right cosets of H in G, with Hx ~ Hy iff
/// y x^{-1} in HgH. Vertex 0 is the coset H, vertex 1 is Hg, so the
/// distinguished arc is always (0, 1). State is shared between copies;
/// immutable after construction.
class CosetGraph {
 public:
  CosetGraph(PermutationGroup group, PermutationGroup point_stabilizer,
             Permutation flip);

  const PermutationGroup& group() const;
  const PermutationGroup& point_stabilizer() const;
  const Permutation& flip() const;
  const Graph& graph() const;
  const std::vector<Permutation>& coset_reps() const;

  int vertex_count() const { return graph().vertex_count(); }

  /// Vertex id of the coset H*x.
  int vertex_of(const Permutation& x) const;

  /// Image of vertex v under right multiplication by an element of G.
  int apply(int v, const Permutation& element) const;

  /// The vertex permutation induced by an element of G.
  Permutation vertex_permutation(const Permutation& element) const;

  /// |H : H ∩ H^g|; asserted equal to the graph degree of vertex 0.
  int valency() const;

  /// Group side: |<H, g>| = |G|; asserted equal to the graph having exactly
  /// one component.
  bool is_connected() const;

  /// True iff H is core-free in G.
  bool is_faithful() const;

  /// Action of H on the neighborhood of vertex 0, in the order given by
  /// graph().neighbors(0); equivalent to H on the cosets of H ∩ H^g.
  GroupActionImage local_action() const;

  bool is_locally_primitive() const;

  /// The arcs form a single orbit of the coset action. Always true for
  /// well-formed inputs; a regression tripwire.
  bool verify_arc_transitive() const;

  PermutationGroup arc_stabilizer() const;  // H ∩ H^g

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

CosetGraph build_coset_graph(const PermutationGroup& g,
                             const PermutationGroup& h, const Permutation& flip);

}  // namespace symcov
