#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symcov/perm.hpp"

namespace symcov {

namespace detail {
class StabChain;  // base and strong generating set; exact order + membership
}

/// Finite permutation group given by generators on {0, ..., degree-1}.
/// Immutable after construction; the stabilizer chain is built eagerly so
/// concurrent read-only queries are safe.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators,
                   std::string name = "");

  static PermutationGroup trivial(int degree);

  /// Reduced generating set: sift elements, keeping only those that enlarge
  /// the group. Deterministic in the order given.
  static PermutationGroup from_elements(int degree,
                                        const std::vector<Permutation>& elements,
                                        std::string name = "");

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::string& name() const { return name_; }

  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }

  std::vector<int> orbit(int point) const;
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  /// Every element exactly once, breadth-first by generator word length,
  /// ties broken by lexicographic image sequence. Throws capacity_error
  /// beyond the element cap.
  std::vector<Permutation> elements() const;

  bool is_subgroup_of(const PermutationGroup& other) const;
  bool same_group_as(const PermutationGroup& other) const;

 private:
  int degree_;
  std::vector<Permutation> gens_;
  std::string name_;
  std::shared_ptr<const detail::StabChain> chain_;
};

PermutationGroup intersect(const PermutationGroup& a, const PermutationGroup& b);

PermutationGroup conjugate_subgroup(const PermutationGroup& h,
                                    const Permutation& g);

/// Largest normal subgroup of g contained in h (h <= g); the kernel of the
/// action of g on the right cosets of h.
PermutationGroup core(const PermutationGroup& g, const PermutationGroup& h);

/// One representative per right coset Hx, breadth-first from the identity
/// over right multiplication by the generators of g. The identity represents
/// coset H itself and comes first.
std::vector<Permutation> right_transversal(const PermutationGroup& g,
                                           const PermutationGroup& h);

/// Canonical key of the right coset h*x: the lexicographically least image
/// sequence over the coset. Two elements get the same key iff they lie in the
/// same right coset of h.
std::vector<int> coset_key(const PermutationGroup& h, const Permutation& x);

/// Same, with the subgroup given by its precomputed element list.
std::vector<int> coset_key(const std::vector<Permutation>& subgroup_elements,
                           const Permutation& x);

/// The right cosets of h contained in the double coset h*g*h, as canonical
/// keys. Its size equals |h : h ∩ h^g|.
std::vector<std::vector<int>> double_coset_cosets(const PermutationGroup& h,
                                                  const Permutation& g,
                                                  const PermutationGroup& within);

/// True iff the (transitive) group admits no nontrivial block system.
bool is_primitive(const PermutationGroup& group);

/// Group generated by the union of the generators of a and b.
PermutationGroup join(const PermutationGroup& a, const PermutationGroup& b,
                      std::string name = "");

PermutationGroup adjoin(const PermutationGroup& a, const Permutation& extra,
                        std::string name = "");

/// All subgroups of a small group, sorted by (order, element list).
std::vector<PermutationGroup> all_subgroups(const PermutationGroup& group,
                                            std::size_t order_cap = 512);

/// A permutation action of a source group on a fresh domain. gen_images is
/// aligned with source.generators(); image_of extends the map to arbitrary
/// elements of the source.
struct GroupActionImage {
  const PermutationGroup* source = nullptr;
  int domain_size = 0;
  std::vector<Permutation> gen_images;
  std::function<Permutation(const Permutation&)> image_of;

  PermutationGroup image_group() const;
};

/// Elements of h acting trivially under the action.
PermutationGroup action_kernel(const PermutationGroup& h,
                               const GroupActionImage& action);

}  // namespace symcov
