#pragma once

#include <optional>
#include <string>

#include "symcov/extender.hpp"

namespace symcov {

enum class TetraBranch {
  DihedralLocal,  // local action D8; construction applies when |G_w| >= 16
  SmallAbelian,   // G_w itself Z2^2 or Z4 (faithful on the neighborhood)
};

/// Decomposed stabilizer structure of a connected tetravalent coset graph
/// whose vertex stabilizer is a 2-group. The construction fields (x, y,
/// normalized flip) are present only on the DihedralLocal branch with
/// |G_w| >= 16.
struct TetraStabilizerData {
  TetraBranch branch;
  PermutationGroup vertex_stab;       // G_w
  PermutationGroup edge_kernel;       // G_w^[1], pointwise neighborhood stabilizer
  PermutationGroup arc_stab;          // G_{ww'}
  std::optional<PermutationGroup> deep_kernel;      // G_{ww'}^[1]
  std::optional<PermutationGroup> neighbor_kernel;  // G_{w'}^[1] = (G_w^[1])^g
  std::optional<Permutation> x;
  std::optional<Permutation> y;
  std::optional<Permutation> normalized_flip;  // g-tilde
};

/// Stabilizer analysis: identifies the branch; when |G_w| >= 16 also finds
/// x, y and the normalized flip. Preconditions: connected, valency 4, vertex
/// stabilizer a 2-group.
TetraStabilizerData analyze_stabilizer(const CosetGraph& sigma);

/// Gamma = Cos(G, <G_w^[1], xy>, with the normalized flip): a connected
/// valency-4 pseudocover on 4 |V Sigma| vertices.
std::pair<ExtenderPair, ClassificationReport> construct_pseudocover(
    const CosetGraph& sigma);

struct VariantResult {
  PermutationGroup subgroup;
  bool connected;
};

/// The four other order-2 lifts L_1 = <K, x^3 y>, L_2 = <K, x^2 y>,
/// L_3 = <K, y>, L_4 = <K, x^2> over K = G_w^[1]. L_2, L_3, L_4 give
/// disconnected graphs; L_1 gives a graph isomorphic to the main one.
std::vector<VariantResult> variant_subgroups(const CosetGraph& sigma);

struct PseudocoverFeasibility {
  bool possible;
  std::string reason;
};

/// False (with the counting reason) when |G_w| is 4 or 8; true otherwise.
PseudocoverFeasibility can_have_connected_pseudocover(const CosetGraph& sigma);

struct Psl2Witness {
  CosetGraph sigma;
  Permutation a;  // order 8
  Permutation b;  // involution, a^b = a^{-1}
  Permutation g;  // involution with H ∩ H^g = <a^4, b>
};

/// Deterministic exhaustive search in PSL(2, p), p = 1 mod 16, for a
/// dihedral subgroup H = <a, b> of order 16 and an involution g with
/// H ∩ H^g = <a^4, b>; returns Sigma = Cos(G, H, HgH).
Psl2Witness psl2_example(int p);

}  // namespace symcov
