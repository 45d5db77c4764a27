#include "symcov/tetra.hpp"

#include <algorithm>

#include "symcov/errors.hpp"
#include "symcov/families.hpp"

namespace symcov {

namespace {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

TetraStabilizerData analyze_stabilizer(const CosetGraph& sigma) {
  if (!sigma.is_connected())
    throw precondition_error("stabilizer analysis needs a connected graph");
  if (sigma.valency() != 4)
    throw precondition_error("stabilizer analysis needs valency 4");
  const auto& h = sigma.point_stabilizer();
  if (!is_power_of_two(h.order()))
    throw precondition_error("vertex stabilizer must be a 2-group");

  auto local = sigma.local_action();
  TetraStabilizerData data{
      h.order() >= 16 ? TetraBranch::DihedralLocal : TetraBranch::SmallAbelian,
      h,
      action_kernel(h, local),
      sigma.arc_stabilizer(),
      {},
      {},
      {},
      {},
      {}};
  if (data.branch == TetraBranch::SmallAbelian) return data;

  // an order-8 transitive group on 4 points is dihedral
  if (local.image_group().order() != 8)
    throw precondition_error("local action is not dihedral of order 8");

  const auto& k = data.edge_kernel;
  const auto& g = sigma.flip();
  auto neighbor_kernel = conjugate_subgroup(k, g);
  auto deep = intersect(k, neighbor_kernel);

  if (data.arc_stab.order() != 2 * k.order() ||
      k.order() != 2 * deep.order())
    throw consistency_error("kernel indices are not both 2");
  if (k.same_group_as(neighbor_kernel))
    throw consistency_error("the two one-sided kernels coincide");
  if (data.arc_stab.order() != 4 * deep.order())
    throw consistency_error("arc stabilizer over its kernel is not of order 4");

  // x: smallest stabilizer element rotating the neighborhood in a 4-cycle
  for (const auto& e : h.elements()) {
    if (local.image_of(e).order() == 4) {
      data.x = e;
      break;
    }
  }
  if (!data.x) throw consistency_error("no element acts as a 4-cycle locally");

  // y: smallest element fixing the far neighborhood pointwise but not the near one
  for (const auto& e : neighbor_kernel.elements()) {
    if (!deep.contains(e)) {
      data.y = e;
      break;
    }
  }
  if (!data.y)
    throw consistency_error("far kernel lies inside the two-sided kernel");
  if (!data.arc_stab.contains(*data.y) || k.contains(*data.y))
    throw consistency_error("y is not in the arc stabilizer minus the kernel");
  if (!adjoin(deep, data.y->conjugated_by(g)).same_group_as(k))
    throw consistency_error("deep kernel and y^g do not generate the kernel");
  {
    auto xbar = local.image_of(*data.x);
    auto ybar = local.image_of(*data.y);
    if (PermutationGroup(4, {xbar, ybar}).order() != 8 || ybar.order() != 2)
      throw consistency_error("local images of x and y do not span the local group");
  }

  data.normalized_flip = k.contains(g * g) ? g : g * *data.y;
  const auto& flip = *data.normalized_flip;
  if (!k.contains(flip * flip))
    throw consistency_error("normalized flip does not square into the kernel");
  if (sigma.vertex_of(flip) != 1)
    throw consistency_error("normalized flip leaves the double coset");

  data.deep_kernel = std::move(deep);
  data.neighbor_kernel = std::move(neighbor_kernel);
  return data;
}

std::pair<ExtenderPair, ClassificationReport> construct_pseudocover(
    const CosetGraph& sigma) {
  auto feasible = can_have_connected_pseudocover(sigma);
  if (!feasible.possible) throw precondition_error(feasible.reason);

  auto data = analyze_stabilizer(sigma);
  if (data.branch != TetraBranch::DihedralLocal)
    throw precondition_error("construction needs vertex stabilizer order >= 16");

  auto lift = adjoin(data.edge_kernel, *data.x * *data.y, "lift");
  auto pair = build_pair(sigma.group(), lift, sigma.point_stabilizer(),
                         *data.normalized_flip);
  auto report = classify(pair);

  if (!pair.gamma.arc_stabilizer().same_group_as(*data.deep_kernel))
    throw consistency_error("arc stabilizer of the lift is not the deep kernel");
  if (!pair.gamma.is_connected())
    throw consistency_error("constructed graph is not connected");
  if (report.val_gamma != 4)
    throw consistency_error("constructed graph is not tetravalent");
  if (pair.gamma.vertex_count() != 4 * sigma.vertex_count())
    throw consistency_error("constructed graph is not a 4-fold blow-up");
  if (!report.is_pseudocover)
    throw consistency_error("constructed graph is not a pseudocover");
  return {std::move(pair), std::move(report)};
}

std::vector<VariantResult> variant_subgroups(const CosetGraph& sigma) {
  auto data = analyze_stabilizer(sigma);
  if (data.branch != TetraBranch::DihedralLocal)
    throw precondition_error("variants need vertex stabilizer order >= 16");

  const auto& k = data.edge_kernel;
  const auto& x = *data.x;
  const auto& y = *data.y;
  const auto& flip = *data.normalized_flip;
  std::vector<Permutation> tops{x * x * x * y, x * x * y, y, x * x};
  std::vector<VariantResult> out;
  for (const auto& t : tops) {
    auto sub = adjoin(k, t);
    bool connected = adjoin(sub, flip).order() == sigma.group().order();
    out.push_back({std::move(sub), connected});
  }
  return out;
}

PseudocoverFeasibility can_have_connected_pseudocover(const CosetGraph& sigma) {
  if (!sigma.is_connected())
    throw precondition_error("feasibility check needs a connected graph");
  if (sigma.valency() != 4)
    throw precondition_error("feasibility check needs valency 4");
  const auto& h = sigma.point_stabilizer();
  if (!is_power_of_two(h.order()))
    throw precondition_error("vertex stabilizer must be a 2-group");
  if (h.order() >= 16) return {true, ""};

  // exhaustive sweep over the candidate subgroups confirms the counting bound
  const auto& g = sigma.flip();
  for (const auto& sub : all_subgroups(h)) {
    if (sub.order() == h.order() || !sub.contains(g * g) || sub.contains(g))
      continue;
    auto pair = build_pair(sigma.group(), sub, h, g);
    auto report = classify(pair);
    if (report.is_pseudocover && report.val_gamma == 4 &&
        pair.gamma.is_connected())
      throw consistency_error(
          "counting bound violated: a small stabilizer admits a connected "
          "tetravalent pseudocover");
  }
  return {false,
          "stabilizer order < 16: with |G_w| = " + std::to_string(h.order()) +
              " the arc stabilizer of any same-valency extender would need "
              "index >= 4 in the current one, leaving no room for a proper "
              "intermediate subgroup"};
}

Psl2Witness psl2_example(int p) {
  if (p % 16 != 1)
    throw precondition_error("search needs a prime p = 1 mod 16");
  if (p > 97) throw precondition_error("search is capped at p <= 97");
  auto g = psl2(p);
  auto els = g.elements();

  for (const auto& a : els) {
    if (a.order() != 8) continue;
    auto a_inv = a.inverse();
    auto pow_a = PermutationGroup(g.degree(), {a});
    for (const auto& b : els) {
      if (b.order() != 2 || pow_a.contains(b)) continue;
      if (a.conjugated_by(b) != a_inv) continue;
      PermutationGroup h(g.degree(), {a, b}, "D16");
      if (h.order() != 16) continue;
      Permutation a4 = a * a * a * a;
      PermutationGroup z(g.degree(), {a4, b});
      if (z.order() != 4) continue;
      for (const auto& c : els) {
        if (c.order() != 2 || h.contains(c)) continue;
        auto inner = intersect(h, conjugate_subgroup(h, c));
        if (!inner.same_group_as(z)) continue;
        if (adjoin(h, c).order() != g.order()) continue;
        CosetGraph sigma(g, h, c);
        if (sigma.valency() != 4)
          throw consistency_error("witness graph is not tetravalent");
        return {std::move(sigma), a, b, c};
      }
    }
  }
  throw consistency_error("no dihedral witness found in PSL(2," +
                          std::to_string(p) + ")");
}

}  // namespace symcov
