#include "symcov/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "symcov/caps.hpp"
#include "symcov/errors.hpp"

namespace symcov {

std::size_t Caps::max_elements = 10'000'000;
std::size_t Caps::max_vertices = 1'000'000;

namespace detail {

namespace {
int first_moved(const Permutation& g) {
  for (int i = 0; i < g.degree(); ++i)
    if (g(i) != i) return i;
  return -1;
}
}  // namespace

/// Deterministic Schreier-Sims stabilizer chain. Base points are chosen
/// greedily as the first moved point of the offending element.
class StabChain {
 public:
  StabChain(int degree, const std::vector<Permutation>& gens) : degree_(degree) {
    for (const auto& g : gens)
      if (!g.is_identity()) insert_strong_generator(g);
    schreier_sims();
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& t : trans_) n *= t.size();
    return n;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [lvl, res] = sift(p, 0);
    (void)lvl;
    return res.is_identity();
  }

  /// Add an element; no-op if already a member.
  void extend(const Permutation& g) {
    if (contains(g)) return;
    insert_strong_generator(g);
    schreier_sims();
  }

 private:
  int degree_;
  std::vector<int> base_;
  std::vector<std::vector<Permutation>> sgens_;  // level i: fixes base_[0..i-1]
  mutable std::vector<std::map<int, Permutation>> trans_;
  mutable std::vector<bool> dirty_;

  void insert_strong_generator(const Permutation& g) {
    std::size_t l = 0;
    while (l < base_.size() && g(base_[l]) == base_[l]) ++l;
    if (l == base_.size()) {
      base_.push_back(first_moved(g));
      sgens_.emplace_back();
      trans_.emplace_back();
      dirty_.push_back(true);
    }
    for (std::size_t k = 0; k <= l; ++k) {
      sgens_[k].push_back(g);
      dirty_[k] = true;
    }
  }

  void ensure_orbit(std::size_t i) const {
    if (!dirty_[i]) return;
    auto& t = trans_[i];
    t.clear();
    t.emplace(base_[i], Permutation(degree_));
    std::deque<int> queue{base_[i]};
    while (!queue.empty()) {
      int pt = queue.front();
      queue.pop_front();
      const Permutation& u = t.at(pt);
      for (const auto& s : sgens_[i]) {
        int q = s(pt);
        if (!t.contains(q)) {
          t.emplace(q, u * s);
          queue.push_back(q);
        }
      }
    }
    dirty_[i] = false;
  }

  // Strip g through levels >= from. Returns the level where stripping stopped
  // (base_.size() if it ran off the end) and the residue.
  std::pair<std::size_t, Permutation> sift(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < base_.size(); ++i) {
      ensure_orbit(i);
      int p = g(base_[i]);
      auto it = trans_[i].find(p);
      if (it == trans_[i].end()) return {i, std::move(g)};
      g = g * it->second.inverse();
    }
    return {base_.size(), std::move(g)};
  }

  void schreier_sims() {
    if (base_.empty()) return;
    auto i = static_cast<long>(base_.size()) - 1;
    while (i >= 0) {
      auto u = static_cast<std::size_t>(i);
      ensure_orbit(u);
      bool grew = false;
      for (const auto& [pt, rep] : trans_[u]) {
        for (const auto& s : sgens_[u]) {
          Permutation h = rep * s;
          Permutation schreier = h * trans_[u].at(h(base_[u])).inverse();
          if (schreier.is_identity()) continue;
          auto [lvl, res] = sift(std::move(schreier), u + 1);
          if (res.is_identity()) continue;
          if (lvl == base_.size()) {
            base_.push_back(first_moved(res));
            sgens_.emplace_back();
            trans_.emplace_back();
            dirty_.push_back(true);
          }
          for (std::size_t k = u + 1; k <= lvl; ++k) {
            sgens_[k].push_back(res);
            dirty_[k] = true;
          }
          i = static_cast<long>(lvl);
          grew = true;
          break;
        }
        if (grew) break;
      }
      if (!grew) --i;
    }
  }
};

}  // namespace detail

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators,
                                   std::string name)
    : degree_(degree), gens_(std::move(generators)), name_(std::move(name)) {
  if (degree_ <= 0) throw precondition_error("group degree must be positive");
  if (gens_.empty()) gens_.push_back(Permutation(degree_));
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw precondition_error("generator degree mismatch");
  chain_ = std::make_shared<detail::StabChain>(degree_, gens_);
}

PermutationGroup PermutationGroup::trivial(int degree) {
  return PermutationGroup(degree, {Permutation(degree)}, "1");
}

PermutationGroup PermutationGroup::from_elements(
    int degree, const std::vector<Permutation>& elements, std::string name) {
  std::vector<Permutation> gens;
  detail::StabChain chain(degree, {});
  for (const auto& e : elements) {
    if (e.degree() != degree) throw precondition_error("element degree mismatch");
    if (!chain.contains(e)) {
      gens.push_back(e);
      chain.extend(e);
    }
  }
  return PermutationGroup(degree, std::move(gens), std::move(name));
}

std::uint64_t PermutationGroup::order() const { return chain_->order(); }

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw precondition_error("degree mismatch in membership test");
  return chain_->contains(p);
}

std::vector<int> PermutationGroup::orbit(int point) const {
  if (point < 0 || point >= degree_)
    throw precondition_error("orbit point out of range");
  std::vector<char> seen(degree_, 0);
  std::deque<int> queue{point};
  seen[point] = 1;
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (const auto& g : gens_) {
      int q = g(p);
      if (!seen[q]) {
        seen[q] = 1;
        queue.push_back(q);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < degree_; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> PermutationGroup::orbits() const {
  std::vector<char> covered(degree_, 0);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < degree_; ++i) {
    if (covered[i]) continue;
    auto orb = orbit(i);
    for (int p : orb) covered[p] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermutationGroup::is_transitive() const {
  return static_cast<int>(orbit(0).size()) == degree_;
}

std::vector<Permutation> PermutationGroup::elements() const {
  if (order() > Caps::max_elements)
    throw capacity_error("group order " + std::to_string(order()) +
                         " exceeds element cap " +
                         std::to_string(Caps::max_elements));
  std::set<Permutation> seen;
  std::vector<Permutation> out;
  Permutation id(degree_);
  seen.insert(id);
  out.push_back(id);
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier)
      for (const auto& g : gens_) {
        Permutation c = e * g;
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (const auto& e : next) out.push_back(e);
    frontier = std::move(next);
  }
  return out;
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermutationGroup::same_group_as(const PermutationGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

PermutationGroup intersect(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree())
    throw precondition_error("degree mismatch in intersection");
  const PermutationGroup& small = a.order() <= b.order() ? a : b;
  const PermutationGroup& big = a.order() <= b.order() ? b : a;
  std::vector<Permutation> kept;
  for (const auto& e : small.elements())
    if (big.contains(e)) kept.push_back(e);
  return PermutationGroup::from_elements(a.degree(), kept);
}

PermutationGroup conjugate_subgroup(const PermutationGroup& h,
                                    const Permutation& g) {
  if (h.degree() != g.degree())
    throw precondition_error("degree mismatch in conjugation");
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto& s : h.generators()) gens.push_back(s.conjugated_by(g));
  return PermutationGroup(h.degree(), std::move(gens));
}

std::vector<int> coset_key(const PermutationGroup& h, const Permutation& x) {
  std::vector<int> best = x.images();
  for (const auto& e : h.elements()) {
    auto cand = (e * x).images();
    if (cand < best) best = std::move(cand);
  }
  return best;
}

std::vector<int> coset_key(const std::vector<Permutation>& subgroup_elements,
                           const Permutation& x) {
  std::vector<int> best = x.images();
  for (const auto& e : subgroup_elements) {
    auto cand = (e * x).images();
    if (cand < best) best = std::move(cand);
  }
  return best;
}

std::vector<Permutation> right_transversal(const PermutationGroup& g,
                                           const PermutationGroup& h) {
  if (!h.is_subgroup_of(g))
    throw precondition_error("transversal: h is not a subgroup of g");
  const std::uint64_t index = g.order() / h.order();
  if (index > Caps::max_vertices)
    throw capacity_error("coset index " + std::to_string(index) +
                         " exceeds vertex cap " +
                         std::to_string(Caps::max_vertices));
  const auto h_elems = h.elements();
  std::map<std::vector<int>, int> seen;
  std::vector<Permutation> reps;
  Permutation id(g.degree());
  seen.emplace(coset_key(h_elems, id), 0);
  reps.push_back(id);
  std::size_t head = 0;
  while (head < reps.size()) {
    Permutation x = reps[head++];
    for (const auto& s : g.generators()) {
      Permutation y = x * s;
      auto key = coset_key(h_elems, y);
      if (!seen.contains(key)) {
        seen.emplace(std::move(key), static_cast<int>(reps.size()));
        reps.push_back(std::move(y));
      }
    }
  }
  if (reps.size() != index)
    throw consistency_error("transversal size disagrees with |g|/|h|");
  return reps;
}

PermutationGroup core(const PermutationGroup& g, const PermutationGroup& h) {
  if (!h.is_subgroup_of(g))
    throw precondition_error("core: h is not a subgroup of g");
  const auto transversal = right_transversal(g, h);
  std::vector<Permutation> kept;
  for (const auto& e : h.elements()) {
    bool in_all = true;
    for (const auto& t : transversal) {
      // e lies in h^t iff t e t^{-1} lies in h
      if (!h.contains(t * e * t.inverse())) {
        in_all = false;
        break;
      }
    }
    if (in_all) kept.push_back(e);
  }
  return PermutationGroup::from_elements(g.degree(), kept);
}

std::vector<std::vector<int>> double_coset_cosets(const PermutationGroup& h,
                                                  const Permutation& g,
                                                  const PermutationGroup& within) {
  if (!h.is_subgroup_of(within))
    throw precondition_error("double coset: h is not a subgroup of the group");
  if (!within.contains(g))
    throw precondition_error("double coset: flip not in the group");
  auto inner = intersect(h, conjugate_subgroup(h, g));
  auto reps = right_transversal(h, inner);
  const auto h_elems = h.elements();
  std::set<std::vector<int>> keys;
  for (const auto& t : reps) keys.insert(coset_key(h_elems, g * t));
  if (keys.size() != h.order() / inner.order())
    throw consistency_error("double coset count disagrees with |h : h ∩ h^g|");
  return {keys.begin(), keys.end()};
}

bool is_primitive(const PermutationGroup& group) {
  if (!group.is_transitive())
    throw precondition_error("primitivity test requires a transitive group");
  const int n = group.degree();
  if (n <= 2) return true;
  for (int w = 1; w < n; ++w) {
    // congruence closure of the pair {0, w}
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::deque<std::pair<int, int>> queue;
    parent[find(w)] = find(0);
    queue.emplace_back(0, w);
    int classes = n - 1;
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      for (const auto& s : group.generators()) {
        int u = s(a), v = s(b);
        int ru = find(u), rv = find(v);
        if (ru != rv) {
          parent[rv] = ru;
          --classes;
          queue.emplace_back(u, v);
        }
      }
    }
    // block containing 0 = class of 0; nontrivial iff 1 < size < n
    int root = find(0);
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (find(i) == root) ++size;
    if (size < n) return false;  // proper block of size >= 2
    (void)classes;
  }
  return true;
}

PermutationGroup join(const PermutationGroup& a, const PermutationGroup& b,
                      std::string name) {
  if (a.degree() != b.degree())
    throw precondition_error("degree mismatch in join");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermutationGroup(a.degree(), std::move(gens), std::move(name));
}

PermutationGroup adjoin(const PermutationGroup& a, const Permutation& extra,
                        std::string name) {
  std::vector<Permutation> gens = a.generators();
  gens.push_back(extra);
  return PermutationGroup(a.degree(), std::move(gens), std::move(name));
}

std::vector<PermutationGroup> all_subgroups(const PermutationGroup& group,
                                            std::size_t order_cap) {
  if (group.order() > order_cap)
    throw capacity_error("subgroup enumeration capped at order " +
                         std::to_string(order_cap));
  const auto elems = group.elements();
  const int n = static_cast<int>(elems.size());
  std::map<Permutation, int> index;
  for (int i = 0; i < n; ++i) index.emplace(elems[i], i);
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[i][j] = index.at(elems[i] * elems[j]);

  auto closure = [&](std::vector<int> seed) {
    std::set<int> members(seed.begin(), seed.end());
    members.insert(0);  // identity is elems[0] by the enumeration order
    std::deque<int> queue(members.begin(), members.end());
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b : std::vector<int>(members.begin(), members.end())) {
        for (int c : {mult[a][b], mult[b][a]}) {
          if (members.insert(c).second) queue.push_back(c);
        }
      }
    }
    return std::vector<int>(members.begin(), members.end());
  };

  std::set<std::vector<int>> found;
  found.insert(closure({}));
  std::deque<std::vector<int>> work(found.begin(), found.end());
  while (!work.empty()) {
    auto sub = work.front();
    work.pop_front();
    std::set<int> have(sub.begin(), sub.end());
    for (int e = 1; e < n; ++e) {
      if (have.contains(e)) continue;
      auto seed = sub;
      seed.push_back(e);
      auto bigger = closure(seed);
      if (found.insert(bigger).second) work.push_back(std::move(bigger));
    }
  }

  std::vector<std::vector<int>> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return std::tuple(a.size(), a) < std::tuple(b.size(), b);
            });
  std::vector<PermutationGroup> out;
  out.reserve(sorted.size());
  for (const auto& ids : sorted) {
    std::vector<Permutation> members;
    members.reserve(ids.size());
    for (int i : ids) members.push_back(elems[i]);
    out.push_back(PermutationGroup::from_elements(group.degree(), members));
  }
  return out;
}

PermutationGroup GroupActionImage::image_group() const {
  return PermutationGroup(domain_size, gen_images);
}

PermutationGroup action_kernel(const PermutationGroup& h,
                               const GroupActionImage& action) {
  std::vector<Permutation> kept;
  for (const auto& e : h.elements())
    if (action.image_of(e).is_identity()) kept.push_back(e);
  return PermutationGroup::from_elements(h.degree(), kept);
}

}  // namespace symcov
