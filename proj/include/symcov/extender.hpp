#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcov/coset_graph.hpp"

namespace symcov {

/// Nested coset graphs Gamma = Cos(G, L, LgL) over Sigma = Cos(G, H, HgH)
/// with L < H and a shared flip, together with the block map Lx -> Hx.
struct ExtenderPair {
  CosetGraph gamma;  // Cos(G, L, LgL)
  CosetGraph sigma;  // Cos(G, H, HgH)
  std::vector<int> block_map;  // gamma vertex -> sigma vertex

  const PermutationGroup& group() const { return gamma.group(); }
  const PermutationGroup& inner() const { return gamma.point_stabilizer(); }
  const PermutationGroup& outer() const { return sigma.point_stabilizer(); }
  const Permutation& flip() const { return gamma.flip(); }

  /// Gamma vertices lying over a sigma vertex.
  std::vector<int> fiber(int sigma_vertex) const;
};

enum class InducedType { PerfectMatching, RegularNonMatching, Irregular };

std::string to_string(InducedType t);

struct ClassificationReport {
  int val_gamma = 0;
  int val_sigma = 0;
  InducedType induced_type = InducedType::Irregular;
  bool is_multicover = false;
  bool is_cover = false;
  bool is_pseudocover = false;
  // Stabilizer criteria, evaluated whenever the valencies agree:
  bool criterion_b = false;  // G_alpha intransitive on Sigma(alpha-bar)
  bool criterion_c = false;  // G_{alpha-bar} != G_alpha * G_{alpha-bar,beta-bar}
  bool criterion_d = false;  // the three stabilizers pairwise distinct
  std::uint64_t order_alpha_betabar = 0;   // |L ∩ H^g|
  std::uint64_t order_alphabar_beta = 0;   // |H ∩ L^g|
  std::uint64_t order_alpha_beta = 0;      // |L ∩ L^g|
  int intra_block_edges = 0;

  std::string verdict() const;  // multicover-only | cover | pseudocover | valency-mismatch
  std::string to_json() const;
};

ExtenderPair build_pair(const PermutationGroup& g, const PermutationGroup& inner,
                        const PermutationGroup& outer, const Permutation& flip);

/// Verdict from the induced subgraph between the blocks of the fixed arc,
/// cross-validated against the stabilizer criteria. Throws
/// consistency_error if the criteria disagree with the combinatorial verdict.
ClassificationReport classify(const ExtenderPair& pair);

/// Evaluates the three multicover conditions (regular induced subgraph;
/// alpha adjacent to every block in Sigma(alpha-bar); G_alpha transitive on
/// Sigma(alpha-bar)), asserts they agree, and returns the common value.
bool check_multicover(const ExtenderPair& pair);

/// Quotient of cg by the orbits of a normal, vertex-intransitive subgroup n;
/// the outer subgroup is <L, N>. The report always shows a multicover.
std::pair<ExtenderPair, ClassificationReport> normal_quotient(
    const CosetGraph& cg, const PermutationGroup& n);

struct ChainReport {
  std::vector<ClassificationReport> steps;   // consecutive pairs
  ClassificationReport end_to_end;           // first subgroup vs last
};

/// Classify a chain H_1 < H_2 < ... < H_n sharing one flip; asserts the
/// composition laws (cover iff every step covers; pseudocover iff some step
/// does).
ChainReport chain_classify(const PermutationGroup& g,
                           const std::vector<PermutationGroup>& chain,
                           const Permutation& flip);

/// Cos(G, H ∩ H^g, ...): valency 1, same edge count as Cos(G, H, HgH).
CosetGraph truncation(const PermutationGroup& g, const PermutationGroup& h,
                      const Permutation& flip);

struct DisconnectedPseudocover {
  Graph graph;                // the blow-up Delta
  BlockPartition partition;   // blocks indexed by sigma vertices
  ClassificationReport report;  // graph-level verdict (no stabilizer criteria)
};

/// Blow each truncation edge up to K_{m,m}, m = val(Sigma). The result is a
/// disconnected graph-level pseudocover of Sigma. Requires m >= 2.
DisconnectedPseudocover disconnected_pseudocover(const PermutationGroup& g,
                                                 const PermutationGroup& h,
                                                 const Permutation& flip);

/// Graph-level classification of gamma over its quotient by the partition:
/// no group data, just the induced-subgraph test.
ClassificationReport classify_graph_level(const Graph& gamma,
                                          const BlockPartition& partition);

}  // namespace symcov
