#include "symcov/coset_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "symcov/caps.hpp"
#include "symcov/errors.hpp"

namespace symcov {

struct CosetGraph::Data {
  PermutationGroup group;
  PermutationGroup stab;
  Permutation flip;
  Graph graph;
  std::vector<Permutation> reps;
  std::map<std::vector<int>, int> coset_index;
  std::vector<Permutation> stab_elements;  // for coset keys
  std::vector<Permutation> arc_reps;       // flip * t, one per neighbor of vertex 0
  int valency = 0;

  Data(PermutationGroup g, PermutationGroup h, Permutation f)
      : group(std::move(g)), stab(std::move(h)), flip(std::move(f)) {}

  int vertex_of(const Permutation& x) const {
    auto it = coset_index.find(coset_key(stab_elements, x));
    if (it == coset_index.end())
      throw consistency_error("element does not lie in any known coset");
    return it->second;
  }
};

CosetGraph::CosetGraph(PermutationGroup group, PermutationGroup point_stabilizer,
                       Permutation flip) {
  auto d = std::make_shared<Data>(std::move(group), std::move(point_stabilizer),
                                  std::move(flip));
  const auto& g = d->group;
  const auto& h = d->stab;

  if (!h.is_subgroup_of(g))
    throw precondition_error("coset graph: H is not a subgroup of G");
  if (!g.contains(d->flip))
    throw precondition_error("coset graph: flip is not an element of G");
  if (h.contains(d->flip))
    throw precondition_error("coset graph: degenerate loop (flip lies in H)");
  if (!h.contains(d->flip * d->flip))
    throw precondition_error("coset graph: flip^2 is not in H");
  const std::uint64_t index = g.order() / h.order();
  if (index > Caps::max_vertices)
    throw capacity_error("coset graph would have " + std::to_string(index) +
                         " vertices, above the cap of " +
                         std::to_string(Caps::max_vertices));

  d->stab_elements = h.elements();

  // transversal, breadth-first from the identity
  Permutation id(g.degree());
  d->coset_index.emplace(coset_key(d->stab_elements, id), 0);
  d->reps.push_back(id);
  std::size_t head = 0;
  while (head < d->reps.size()) {
    Permutation x = d->reps[head++];
    for (const auto& s : g.generators()) {
      Permutation y = x * s;
      auto key = coset_key(d->stab_elements, y);
      if (!d->coset_index.contains(key)) {
        d->coset_index.emplace(std::move(key), static_cast<int>(d->reps.size()));
        d->reps.push_back(std::move(y));
      }
    }
  }
  if (d->reps.size() != index)
    throw consistency_error("coset count disagrees with |G|/|H|");

  // make the coset Hg vertex 1
  {
    int v = d->vertex_of(d->flip);
    if (v != 1) {
      std::swap(d->reps[1], d->reps[v]);
      for (auto& [key, idx] : d->coset_index) {
        if (idx == 1)
          idx = v;
        else if (idx == v)
          idx = 1;
      }
    }
    d->reps[1] = d->flip;  // align the distinguished rep with the flip itself
  }

  // arc representatives: flip * t over a transversal of H ∩ H^flip in H
  auto inner = intersect(h, conjugate_subgroup(h, d->flip));
  for (const auto& t : right_transversal(h, inner))
    d->arc_reps.push_back(d->flip * t);
  d->valency = static_cast<int>(d->arc_reps.size());

  // adjacency by neighbor expansion: neighbors of Hx are H(g t x)
  const int n = static_cast<int>(d->reps.size());
  d->graph = Graph(n);
  for (int v = 0; v < n; ++v)
    for (const auto& a : d->arc_reps) d->graph.add_edge(v, d->vertex_of(a * d->reps[v]));

  // cross-check against the pairwise double-coset membership test
  if (n <= 200) {
    std::set<std::vector<int>> arc_keys;
    for (const auto& a : d->arc_reps)
      arc_keys.insert(coset_key(d->stab_elements, a));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool in_double_coset =
            arc_keys.contains(coset_key(d->stab_elements, d->reps[v] * d->reps[u].inverse()));
        if (in_double_coset != d->graph.adjacent(u, v))
          throw consistency_error("adjacency disagrees with the double coset test");
      }
  }

  if (d->graph.degree(0) != d->valency)
    throw consistency_error("graph valency disagrees with |H : H ∩ H^g|");

  d_ = std::move(d);
}

const PermutationGroup& CosetGraph::group() const { return d_->group; }
const PermutationGroup& CosetGraph::point_stabilizer() const { return d_->stab; }
const Permutation& CosetGraph::flip() const { return d_->flip; }
const Graph& CosetGraph::graph() const { return d_->graph; }
const std::vector<Permutation>& CosetGraph::coset_reps() const { return d_->reps; }

int CosetGraph::vertex_of(const Permutation& x) const { return d_->vertex_of(x); }

int CosetGraph::apply(int v, const Permutation& element) const {
  return d_->vertex_of(d_->reps[v] * element);
}

Permutation CosetGraph::vertex_permutation(const Permutation& element) const {
  std::vector<int> images(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) images[v] = apply(v, element);
  return Permutation(std::move(images));
}

int CosetGraph::valency() const { return d_->valency; }

bool CosetGraph::is_connected() const {
  bool group_side = adjoin(d_->stab, d_->flip).order() == d_->group.order();
  bool graph_side = connected_components(d_->graph).size() == 1;
  if (group_side != graph_side)
    throw consistency_error("connectivity: group and graph sides disagree");
  return group_side;
}

bool CosetGraph::is_faithful() const {
  return core(d_->group, d_->stab).is_trivial();
}

GroupActionImage CosetGraph::local_action() const {
  const auto nbrs = d_->graph.neighbors(0);
  auto data = d_;
  std::map<std::vector<int>, int> pos_of;
  std::vector<Permutation> nbr_reps;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    nbr_reps.push_back(data->reps[nbrs[i]]);
    pos_of.emplace(coset_key(data->stab_elements, nbr_reps.back()),
                   static_cast<int>(i));
  }
  auto image_of = [data, pos_of, nbr_reps](const Permutation& e) {
    std::vector<int> images(nbr_reps.size());
    for (std::size_t i = 0; i < nbr_reps.size(); ++i) {
      auto it = pos_of.find(coset_key(data->stab_elements, nbr_reps[i] * e));
      if (it == pos_of.end())
        throw consistency_error("element does not preserve the neighborhood");
      images[i] = it->second;
    }
    return Permutation(std::move(images));
  };
  GroupActionImage action;
  action.source = &d_->stab;
  action.domain_size = static_cast<int>(nbrs.size());
  for (const auto& s : d_->stab.generators()) action.gen_images.push_back(image_of(s));
  action.image_of = std::move(image_of);
  return action;
}

bool CosetGraph::is_locally_primitive() const {
  return is_primitive(local_action().image_group());
}

bool CosetGraph::verify_arc_transitive() const {
  const int n = vertex_count();
  std::vector<Permutation> gen_perms;
  for (const auto& s : d_->group.generators())
    gen_perms.push_back(vertex_permutation(s));
  std::set<std::pair<int, int>> reached;
  std::deque<std::pair<int, int>> queue{{0, 1}};
  reached.insert({0, 1});
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    for (const auto& p : gen_perms) {
      std::pair<int, int> img{p(u), p(v)};
      if (reached.insert(img).second) queue.push_back(img);
    }
  }
  return reached.size() == 2u * static_cast<std::size_t>(d_->graph.edge_count());
}

PermutationGroup CosetGraph::arc_stabilizer() const {
  return intersect(d_->stab, conjugate_subgroup(d_->stab, d_->flip));
}

CosetGraph build_coset_graph(const PermutationGroup& g, const PermutationGroup& h,
                             const Permutation& flip) {
  return CosetGraph(g, h, flip);
}

}  // namespace symcov
