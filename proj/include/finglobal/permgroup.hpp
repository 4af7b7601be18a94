#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "finglobal/perm.hpp"

namespace finglobal {

/// Size caps for exhaustive enumeration.
struct Limits {
  std::size_t max_group_order = 50000;
  std::size_t max_lattice_order = 1000;
};

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// A finite permutation group with its complete, lexicographically sorted
/// element list. Immutable after construction; share it through GroupPtr.
class PermGroup {
  struct Token {};

 public:
  PermGroup(Token, int degree, std::vector<Perm> generators, std::vector<Perm> sorted_elements);

  /// Breadth-first closure of `generators`. Throws CapExceeded past `cap`.
  static GroupPtr generate(int degree, std::vector<Perm> generators,
                           std::size_t cap = Limits{}.max_group_order);
  /// Wraps an element list already known to be a group. When `generators`
  /// is empty a small generating set is chosen.
  static GroupPtr from_elements(int degree, std::vector<Perm> elements, std::vector<Perm> generators = {});

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::uint32_t i) const { return elements_[i]; }

  std::optional<std::uint32_t> find(const Perm& p) const;
  /// Index of `p`; throws InvalidInput if absent.
  std::uint32_t index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return find(p).has_value(); }

  /// Identity depends only on degree and element set.
  const std::string& key() const { return key_; }
  bool is_subgroup_of(const PermGroup& g) const;
  bool same_group(const PermGroup& g) const { return key_ == g.key_; }

  /// Generators in cycle notation plus the order, for labels and logs.
  std::string describe() const;

 private:
  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::string key_;
};

/// Closes `generators` under products without building a group object.
std::vector<Perm> close_elements(int degree, std::span<const Perm> generators, std::size_t cap);

/// The group generated by `generators` on `degree` points.
GroupPtr close_generators(int degree, std::vector<Perm> generators, std::size_t cap = Limits{}.max_group_order);

/// A short generating list for a group given by its elements.
std::vector<Perm> small_generating_set(int degree, std::span<const Perm> elements);

/// A homomorphism between permutation groups, stored as a total map on
/// element indices.
class GroupHom {
 public:
  /// Verifies the homomorphism property; throws InvalidInput otherwise.
  GroupHom(GroupPtr source, GroupPtr target, std::vector<std::uint32_t> map);

  /// Builds the map from a function on permutations, then verifies it.
  template <class F>
  static GroupHom from_function(GroupPtr source, GroupPtr target, F&& f) {
    std::vector<std::uint32_t> map(source->order());
    for (std::uint32_t i = 0; i < source->order(); ++i) map[i] = target->index_of(f(source->element(i)));
    return GroupHom(std::move(source), std::move(target), std::move(map));
  }

  /// Extends images of source->generators() (target element indices).
  /// Returns nullopt if they do not define a homomorphism.
  static std::optional<GroupHom> from_generator_images(GroupPtr source, GroupPtr target,
                                                        std::span<const std::uint32_t> images);

  static GroupHom identity(GroupPtr g);
  /// Subgroup inclusion; both groups must have equal degree.
  static GroupHom inclusion(GroupPtr sub, GroupPtr group);
  /// Inclusion of a lower-degree group acting on the first points.
  static GroupHom embedding(GroupPtr sub, GroupPtr group);
  /// x -> g x g^-1 from `source` into `target`.
  static GroupHom conjugation(GroupPtr source, GroupPtr target, const Perm& g);
  static GroupHom trivial(GroupPtr source, GroupPtr target);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<std::uint32_t>& map() const { return map_; }
  std::uint32_t operator()(std::uint32_t i) const { return map_[i]; }
  const Perm& operator()(const Perm& p) const { return target_->element(map_[source_->index_of(p)]); }

  /// next ∘ this
  GroupHom then(const GroupHom& next) const;
  GroupHom restrict_to(GroupPtr sub) const;
  /// Same map with a target that contains the image.
  GroupHom corestrict_to(GroupPtr new_target) const;

  bool is_injective() const;
  bool is_surjective() const;
  GroupPtr image() const;
  /// Preimage of a subgroup of the target.
  GroupPtr preimage(const PermGroup& sub) const;
  /// Exhaustive check of f(xy) = f(x)f(y) over all pairs.
  bool verify_full() const;

 private:
  struct Unchecked {};
  GroupHom(Unchecked, GroupPtr source, GroupPtr target, std::vector<std::uint32_t> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  GroupPtr source_;
  GroupPtr target_;
  std::vector<std::uint32_t> map_;
};

// ---- standard groups -------------------------------------------------------

/// Σ_n on points 1..n. Σ_0 is the trivial group on one point, so Σ_0 = Σ_1.
GroupPtr symmetric_group(int n, std::size_t cap = Limits{}.max_group_order);
GroupPtr alternating_group(int n, std::size_t cap = Limits{}.max_group_order);
/// Product of symmetric groups on consecutive blocks of the given sizes.
/// Zero-size blocks are dropped.
GroupPtr young_subgroup(std::span<const int> blocks, std::size_t cap = Limits{}.max_group_order);
GroupPtr young_subgroup(int k, int l, std::size_t cap = Limits{}.max_group_order);
GroupPtr trivial_group(int degree);
/// The same group acting on `degree` points, fixing the new ones.
GroupPtr extend_degree(const PermGroup& g, int degree);
/// G x H acting on deg(G) + deg(H) points, G first.
GroupPtr direct_product(const PermGroup& g, const PermGroup& h, std::size_t cap = Limits{}.max_group_order);

/// i_n : Σ_{n-1} -> Σ_n, extension by a fixed last point.
GroupHom standard_embedding(int n);
/// Restriction to the invariant block [first, first + count), onto Σ_count.
GroupHom block_projection(GroupPtr group, int first, int count);
/// α x β between direct products built by direct_product.
GroupHom product_hom(GroupPtr source, GroupPtr target, const GroupHom& left, const GroupHom& right);

// ---- algorithms --------------------------------------------------------------

/// Conjugacy classes with element-to-class lookup. Classes are ordered by
/// their representative, which is the least element of the class.
struct ConjugacyClasses {
  GroupPtr group;
  std::vector<Perm> representatives;
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<std::uint32_t> class_of;

  std::size_t size() const { return representatives.size(); }
  std::size_t class_size(std::size_t c) const { return members[c].size(); }
  std::size_t class_index(const Perm& p) const { return class_of[group->index_of(p)]; }
};

std::shared_ptr<const ConjugacyClasses> conjugacy_classes(GroupPtr g);

/// Least representatives of the double cosets H g K, in increasing order.
std::vector<Perm> double_cosets(const PermGroup& g, const PermGroup& h, const PermGroup& k);

/// Pairs of distinct sub-classes whose representatives are conjugate in
/// `group`. A subgroup on fewer points is extended by fixed points.
std::vector<std::pair<Perm, Perm>> fused_pairs(GroupPtr sub, GroupPtr group);

GroupPtr centralizer(const PermGroup& g, const Perm& x);
GroupPtr normalizer(const PermGroup& g, const PermGroup& h);
std::size_t weyl_order(const PermGroup& g, const PermGroup& h);
GroupPtr intersection(const PermGroup& a, const PermGroup& b);
/// g H g^-1
GroupPtr conjugate_subgroup(const PermGroup& h, const Perm& g);
/// Orbits on 0-based points, each sorted, ordered by least point.
std::vector<std::vector<int>> orbits(const PermGroup& g);

}  // namespace finglobal
