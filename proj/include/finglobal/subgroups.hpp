#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "finglobal/permgroup.hpp"

namespace finglobal {

/// A subset of a group's elements, as a bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  void insert(std::uint32_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::uint32_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t count() const;
  std::vector<std::uint32_t> indices() const;
  std::size_t hash() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// All subgroups of a group up to conjugacy, with a lookup from any
/// subgroup to its class and a conjugating element.
///
/// Enumeration joins class representatives with cyclic subgroups until no new
/// class appears. Classes are sorted by order, then by the sorted index list
/// of their least conjugate; that conjugate is the representative.
class SubgroupLattice {
 public:
  struct SubgroupClass {
    GroupPtr representative;
    ElementSet elements;
    std::size_t conjugates = 0;
  };

  /// subgroup = g * representative * g^-1 with g = group()->element(conjugator)
  struct Match {
    std::size_t class_index;
    std::uint32_t conjugator;
  };

  explicit SubgroupLattice(GroupPtr group, std::size_t cap = Limits{}.max_lattice_order);

  const GroupPtr& group() const { return group_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  std::size_t total_subgroups() const { return lookup_.size(); }

  Match identify(const ElementSet& subgroup) const;
  Match identify(const PermGroup& subgroup) const { return identify(element_set(subgroup)); }
  ElementSet element_set(const PermGroup& subgroup) const;
  GroupPtr subgroup(const ElementSet& s) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }

 private:
  ElementSet conjugate(const ElementSet& s, std::uint32_t g) const;

  GroupPtr group_;
  std::size_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<SubgroupClass> classes_;
  std::unordered_map<ElementSet, Match, ElementSetHash> lookup_;
};

/// One representative per conjugacy class of subgroups.
std::vector<GroupPtr> subgroup_classes(GroupPtr group, std::size_t cap = Limits{}.max_lattice_order);

}  // namespace finglobal
