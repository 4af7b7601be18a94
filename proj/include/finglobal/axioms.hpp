#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finglobal/functor.hpp"

namespace finglobal {

/// Groups, homomorphisms and subgroups on which the relations are checked.
/// subgroups[i] lists subgroups of groups[i] (equal degree).
struct Probe {
  std::vector<GroupPtr> groups;
  std::vector<std::vector<GroupPtr>> subgroups;
  std::vector<GroupHom> homs;
  /// Inner automorphisms by every element for groups up to this order,
  /// by generators beyond it.
  std::size_t all_inner_up_to = 24;
};

/// Σ_m for m ≤ max_n with all Young subgroups on consecutive blocks, the
/// maps i_m, the inclusions Σ_{k,m-k} -> Σ_m, both block projections and
/// projections to the trivial group. With `lattice_subgroups` every
/// subgroup class representative is added as well.
Probe standard_probe(int max_n, bool lattice_subgroups = false);

struct RelationResult {
  std::string relation;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// First failing instance: description, difference lhs - rhs and the
  /// first basis vector on which they differ.
  std::string counterexample;
  std::optional<ZMatrix> difference;
  std::optional<std::size_t> column;

  bool passed() const { return failures == 0; }
};

struct AxiomReport {
  std::string functor;
  std::vector<RelationResult> relations;

  bool passed() const;
};

AxiomReport verify_axioms(const GlobalFunctor& f, const Probe& probe);

}  // namespace finglobal
