#include "symcov/extender.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "symcov/errors.hpp"

namespace symcov {

std::vector<int> ExtenderPair::fiber(int sigma_vertex) const {
  std::vector<int> out;
  for (int v = 0; v < gamma.vertex_count(); ++v)
    if (block_map[v] == sigma_vertex) out.push_back(v);
  return out;
}

std::string to_string(InducedType t) {
  switch (t) {
    case InducedType::PerfectMatching: return "perfect-matching";
    case InducedType::RegularNonMatching: return "regular-non-matching";
    case InducedType::Irregular: return "irregular";
  }
  return "?";
}

std::string ClassificationReport::verdict() const {
  if (is_cover) return "cover";
  if (is_pseudocover) return "pseudocover";
  if (is_multicover) return "multicover-only";
  return "valency-mismatch";
}

std::string ClassificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["val_gamma"] = val_gamma;
  j["val_sigma"] = val_sigma;
  j["induced_type"] = to_string(induced_type);
  j["is_multicover"] = is_multicover;
  j["is_cover"] = is_cover;
  j["is_pseudocover"] = is_pseudocover;
  j["criterion_b"] = criterion_b;
  j["criterion_c"] = criterion_c;
  j["criterion_d"] = criterion_d;
  j["stabilizer_orders"] = {{"alpha_betabar", order_alpha_betabar},
                           {"alphabar_beta", order_alphabar_beta},
                           {"alpha_beta", order_alpha_beta}};
  j["verdict"] = verdict();
  return j.dump();
}

ExtenderPair build_pair(const PermutationGroup& g, const PermutationGroup& inner,
                        const PermutationGroup& outer, const Permutation& flip) {
  if (!inner.is_subgroup_of(outer) || inner.order() >= outer.order())
    throw precondition_error("extender pair: L must be a proper subgroup of H");
  if (!outer.is_subgroup_of(g))
    throw precondition_error("extender pair: H is not a subgroup of G");
  if (inner.contains(flip))
    throw precondition_error("extender pair: flip lies in L");
  if (!inner.contains(flip * flip))
    throw precondition_error("extender pair: flip^2 is not in L");

  ExtenderPair pair{CosetGraph(g, inner, flip), CosetGraph(g, outer, flip), {}};
  pair.block_map.resize(pair.gamma.vertex_count());
  for (int v = 0; v < pair.gamma.vertex_count(); ++v)
    pair.block_map[v] = pair.sigma.vertex_of(pair.gamma.coset_reps()[v]);

  if (pair.block_map[0] != 0 || pair.block_map[1] != 1)
    throw consistency_error("block map does not send the fixed arc to the fixed arc");
  std::vector<int> fiber_size(pair.sigma.vertex_count(), 0);
  for (int b : pair.block_map) ++fiber_size[b];
  const int expected = static_cast<int>(outer.order() / inner.order());
  for (int s : fiber_size)
    if (s != expected)
      throw consistency_error("block map fibers are not of constant size |H:L|");
  return pair;
}

namespace {

// Orbit of sigma vertex 1 under a subgroup acting on sigma's vertices.
std::set<int> orbit_on_sigma(const CosetGraph& sigma, const PermutationGroup& sub,
                             int start) {
  std::set<int> orbit{start};
  std::vector<int> queue{start};
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (const auto& s : sub.generators()) {
      int w = sigma.apply(v, s);
      if (orbit.insert(w).second) queue.push_back(w);
    }
  }
  return orbit;
}

bool inner_transitive_on_sigma_neighborhood(const ExtenderPair& pair) {
  const auto& nbrs = pair.sigma.graph().neighbors(0);
  auto orbit = orbit_on_sigma(pair.sigma, pair.gamma.point_stabilizer(), 1);
  return std::all_of(nbrs.begin(), nbrs.end(),
                     [&](int w) { return orbit.contains(w); });
}

InducedType induced_type_of(const ExtenderPair& pair, int* intra_edges) {
  auto induced = induced_bipartite(pair.gamma.graph(), pair.fiber(0), pair.fiber(1));
  if (intra_edges) *intra_edges = induced.intra_block_edges;
  auto d = is_regular(induced.graph);
  if (!d) return InducedType::Irregular;
  return *d == 1 ? InducedType::PerfectMatching : InducedType::RegularNonMatching;
}

}  // namespace

ClassificationReport classify(const ExtenderPair& pair) {
  ClassificationReport rep;
  rep.val_gamma = pair.gamma.valency();
  rep.val_sigma = pair.sigma.valency();
  rep.induced_type = induced_type_of(pair, &rep.intra_block_edges);
  rep.is_multicover = rep.induced_type != InducedType::Irregular;
  rep.is_cover = rep.induced_type == InducedType::PerfectMatching;
  rep.is_pseudocover = rep.val_gamma == rep.val_sigma && !rep.is_cover;

  const auto& inner = pair.gamma.point_stabilizer();
  const auto& outer = pair.sigma.point_stabilizer();
  auto inner_conj = conjugate_subgroup(inner, pair.flip());
  auto outer_conj = conjugate_subgroup(outer, pair.flip());
  auto stab_alpha_betabar = intersect(inner, outer_conj);   // L ∩ H^g
  auto stab_alphabar_beta = intersect(outer, inner_conj);   // H ∩ L^g
  auto stab_alpha_beta = intersect(inner, inner_conj);      // L ∩ L^g
  auto stab_alphabar_betabar = intersect(outer, outer_conj);  // H ∩ H^g
  rep.order_alpha_betabar = stab_alpha_betabar.order();
  rep.order_alphabar_beta = stab_alphabar_beta.order();
  rep.order_alpha_beta = stab_alpha_beta.order();

  rep.criterion_b = !inner_transitive_on_sigma_neighborhood(pair);

  // |L * (H ∩ H^g)| = |L| |H ∩ H^g| / |L ∩ H^g|
  const std::uint64_t product_order = inner.order() *
                                      stab_alphabar_betabar.order() /
                                      stab_alpha_betabar.order();
  rep.criterion_c = product_order != outer.order();

  const bool eq_ab_abb = stab_alpha_beta.same_group_as(stab_alpha_betabar);
  const bool eq_ab_abarb = stab_alpha_beta.same_group_as(stab_alphabar_beta);
  const bool eq_abb_abarb = stab_alpha_betabar.same_group_as(stab_alphabar_beta);
  const bool all_equal = eq_ab_abb && eq_ab_abarb && eq_abb_abarb;
  const bool pairwise_distinct = !eq_ab_abb && !eq_ab_abarb && !eq_abb_abarb;
  if (!all_equal && !pairwise_distinct)
    throw consistency_error("stabilizer trichotomy violated");
  rep.criterion_d = pairwise_distinct;

  // Cross checks between the combinatorial and stabilizer verdicts; failure
  // indicates an implementation bug.
  if (rep.is_multicover == rep.criterion_b)
    throw consistency_error("multicover verdict disagrees with transitivity");
  if (rep.is_multicover || rep.val_gamma == rep.val_sigma) {
    if (rep.is_cover != all_equal)
      throw consistency_error("cover verdict disagrees with stabilizer equality");
  }
  if (rep.val_gamma == rep.val_sigma) {
    if (rep.criterion_b != rep.is_pseudocover ||
        rep.criterion_c != rep.is_pseudocover ||
        rep.criterion_d != rep.is_pseudocover)
      throw consistency_error("pseudocover criteria disagree on a same-valency pair");
  }
  return rep;
}

bool check_multicover(const ExtenderPair& pair) {
  const bool regular = induced_type_of(pair, nullptr) != InducedType::Irregular;

  // alpha adjacent to every block in Sigma(alpha-bar)
  std::set<int> blocks_seen;
  for (int w : pair.gamma.graph().neighbors(0)) blocks_seen.insert(pair.block_map[w]);
  const auto& sigma_nbrs = pair.sigma.graph().neighbors(0);
  const bool adjacent_to_all =
      std::all_of(sigma_nbrs.begin(), sigma_nbrs.end(),
                  [&](int b) { return blocks_seen.contains(b); });

  const bool transitive = inner_transitive_on_sigma_neighborhood(pair);

  if (regular != adjacent_to_all || regular != transitive)
    throw consistency_error("multicover conditions disagree");
  return regular;
}

std::pair<ExtenderPair, ClassificationReport> normal_quotient(
    const CosetGraph& cg, const PermutationGroup& n) {
  const auto& g = cg.group();
  if (!n.is_subgroup_of(g))
    throw precondition_error("normal quotient: N is not a subgroup of G");
  for (const auto& t : g.generators())
    for (const auto& c : n.generators())
      if (!n.contains(c.conjugated_by(t)))
        throw precondition_error("normal quotient: N is not normal in G");
  {
    std::set<int> orbit{0};
    std::vector<int> queue{0};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (const auto& s : n.generators()) {
        int w = cg.apply(v, s);
        if (orbit.insert(w).second) queue.push_back(w);
      }
    }
    if (static_cast<int>(orbit.size()) == cg.vertex_count())
      throw precondition_error("normal quotient: N is transitive on vertices");
  }
  auto outer = join(cg.point_stabilizer(), n);
  auto pair = build_pair(g, cg.point_stabilizer(), outer, cg.flip());
  auto report = classify(pair);
  if (!report.is_multicover)
    throw consistency_error("normal quotient failed to be a multicover");
  return {std::move(pair), std::move(report)};
}

ChainReport chain_classify(const PermutationGroup& g,
                           const std::vector<PermutationGroup>& chain,
                           const Permutation& flip) {
  if (chain.size() < 2)
    throw precondition_error("chain must contain at least two subgroups");
  if (!chain.front().contains(flip * flip))
    throw precondition_error("chain: flip^2 is not in the smallest subgroup");
  ChainReport out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    out.steps.push_back(classify(build_pair(g, chain[i], chain[i + 1], flip)));
  {
    const int val = out.steps.front().val_gamma;
    for (const auto& s : out.steps)
      if (s.val_gamma != val || s.val_sigma != val)
        throw precondition_error("chain members must share one valency");
  }
  out.end_to_end = chain.size() == 2
                       ? out.steps.front()
                       : classify(build_pair(g, chain.front(), chain.back(), flip));

  const bool all_cover = std::all_of(out.steps.begin(), out.steps.end(),
                                     [](const auto& s) { return s.is_cover; });
  const bool some_pseudo = std::any_of(out.steps.begin(), out.steps.end(),
                                       [](const auto& s) { return s.is_pseudocover; });
  if (out.end_to_end.is_cover != all_cover ||
      out.end_to_end.is_pseudocover != some_pseudo)
    throw consistency_error("chain composition law violated");
  return out;
}

CosetGraph truncation(const PermutationGroup& g, const PermutationGroup& h,
                      const Permutation& flip) {
  auto inner = intersect(h, conjugate_subgroup(h, flip));
  CosetGraph trunc(g, inner, flip);
  if (trunc.valency() != 1)
    throw consistency_error("truncation valency is not 1");
  const std::uint64_t sigma_edges =
      (g.order() / h.order()) * (h.order() / inner.order()) / 2;
  if (static_cast<std::uint64_t>(trunc.graph().edge_count()) != sigma_edges)
    throw consistency_error("truncation edge count disagrees with the source");
  return trunc;
}

ClassificationReport classify_graph_level(const Graph& gamma,
                                          const BlockPartition& partition) {
  ClassificationReport rep;
  auto quotient = quotient_graph(gamma, partition);
  auto vg = is_regular(gamma);
  auto vs = is_regular(quotient);
  if (!vg || !vs)
    throw precondition_error("graph-level classification requires regular graphs");
  rep.val_gamma = *vg;
  rep.val_sigma = *vs;
  // first cross-block arc
  int block_a = -1, block_b = -1;
  for (auto [u, v] : gamma.edges()) {
    if (partition.block_of[u] != partition.block_of[v]) {
      block_a = partition.block_of[u];
      block_b = partition.block_of[v];
      break;
    }
  }
  if (block_a < 0)
    throw precondition_error("graph-level classification: no cross-block edge");
  auto induced = induced_bipartite(gamma, partition.blocks[block_a],
                                   partition.blocks[block_b]);
  rep.intra_block_edges = induced.intra_block_edges;
  auto d = is_regular(induced.graph);
  rep.induced_type = !d ? InducedType::Irregular
                        : (*d == 1 ? InducedType::PerfectMatching
                                   : InducedType::RegularNonMatching);
  rep.is_multicover = rep.induced_type != InducedType::Irregular;
  rep.is_cover = rep.induced_type == InducedType::PerfectMatching;
  rep.is_pseudocover = rep.val_gamma == rep.val_sigma && !rep.is_cover;
  return rep;
}

DisconnectedPseudocover disconnected_pseudocover(const PermutationGroup& g,
                                                 const PermutationGroup& h,
                                                 const Permutation& flip) {
  CosetGraph sigma(g, h, flip);
  const int m = sigma.valency();
  if (m < 2)
    throw precondition_error(
        "perfect matching has no pseudocover of this form (valency 1)");
  auto trunc = truncation(g, h, flip);
  auto [delta, fibers] = lexicographic_blowup(trunc.graph(), m);
  const int n = trunc.vertex_count();

  // composite block map (i, Lx) -> Hx, blocks indexed by sigma vertex
  std::vector<std::vector<int>> blocks(sigma.vertex_count());
  for (int v = 0; v < n; ++v) {
    int s = sigma.vertex_of(trunc.coset_reps()[v]);
    for (int i = 0; i < m; ++i) blocks[s].push_back(i * n + v);
  }
  auto partition = BlockPartition::from_blocks(delta.vertex_count(), std::move(blocks));

  auto report = classify_graph_level(delta, partition);
  if (!report.is_pseudocover || report.val_gamma != m)
    throw consistency_error("blow-up failed to classify as a pseudocover");
  if (connected_components(delta).size() == 1)
    throw consistency_error("blow-up is unexpectedly connected");
  if (quotient_graph(delta, partition).edges() != sigma.graph().edges())
    throw consistency_error("blow-up quotient disagrees with the source graph");
  return {std::move(delta), std::move(partition), std::move(report)};
}

}  // namespace symcov
