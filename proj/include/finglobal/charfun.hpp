#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finglobal/linalg.hpp"
#include "finglobal/permgroup.hpp"

namespace finglobal {

/// A weakly decreasing sequence of positive integers.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Throws InvalidInput unless weakly decreasing and positive.
  explicit Partition(std::vector<int> p);

  int size() const;
  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);
std::size_t partition_count(int n);

/// χ^λ on the class of cycle type μ by border-strip removal.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// An integer-valued function on conjugacy classes.
struct ClassFunction {
  std::shared_ptr<const ConjugacyClasses> classes;
  std::vector<std::int64_t> values;

  const GroupPtr& group() const { return classes->group; }
  std::int64_t at(const Perm& g) const { return values[classes->class_index(g)]; }
};

/// One irreducible per factor of a product of symmetric groups.
using CharacterLabel = std::vector<Partition>;
std::string to_string(const CharacterLabel& label);

/// Character table of a product of symmetric groups. Rows follow the
/// reverse-lexicographic order of labels (first factor slowest); columns
/// are the group's classes, listed for display in `column_order`
/// (increasing cycle type per factor, so the identity comes first).
struct CharacterTable {
  std::shared_ptr<const ConjugacyClasses> classes;
  std::vector<CharacterLabel> labels;
  std::vector<ClassFunction> irreducibles;
  std::vector<std::size_t> column_order;

  const GroupPtr& group() const { return classes->group; }
  std::size_t size() const { return irreducibles.size(); }
  /// Rows = irreducibles, columns in display order.
  ZMatrix matrix() const;
};

/// The orbits of `g` when g is the full product of symmetric groups on
/// them (|g| = Π |orbit|!), else nullopt.
std::optional<std::vector<std::vector<int>>> symmetric_blocks(const PermGroup& g);

/// Cycle lengths of p on an invariant set of points (0-based), decreasing.
std::vector<int> cycle_type_on(const Perm& p, std::span<const int> points);

CharacterTable char_table_symmetric(int n, int max_n = 8);
/// Table of any product of symmetric groups on its orbits; throws
/// InvalidInput for other groups.
CharacterTable char_table_young(GroupPtr g);
/// Table of the external direct product, built on direct_product(A, B).
CharacterTable char_table_product(const CharacterTable& a, const CharacterTable& b);

/// Σ_c |c| φ(c) ψ(c) = |G| ⟨φ, ψ⟩ (characters here are real).
std::int64_t scaled_inner_product(const ClassFunction& phi, const ClassFunction& psi);
/// ⟨φ, ψ⟩; throws InvalidInput if not an integer.
std::int64_t inner_product(const ClassFunction& phi, const ClassFunction& psi);

/// α^* φ, a class function on α's source.
ClassFunction restrict_classfunction(const ClassFunction& phi, const GroupHom& alpha,
                                     std::shared_ptr<const ConjugacyClasses> source_classes = nullptr);

/// Induced class functions from a subgroup, by direct summation over G.
std::vector<ClassFunction> induce_classfunctions(std::span<const ClassFunction> phis,
                                                 std::shared_ptr<const ConjugacyClasses> group_classes);
ClassFunction induce_classfunction(const ClassFunction& phi, std::shared_ptr<const ConjugacyClasses> group_classes);

/// Multiplicities of the irreducibles in φ; throws InvalidInput when any is
/// not an integer.
ZVector decompose_into_irreducibles(const ClassFunction& phi, const CharacterTable& table);

}  // namespace finglobal
