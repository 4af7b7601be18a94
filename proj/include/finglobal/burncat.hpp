#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "finglobal/burnside.hpp"
#include "finglobal/functor.hpp"

namespace finglobal {

/// Basis of A(K, G), the morphisms from K to G. A basis element is the class
/// of a pair (H ≤ G, α : H -> K) and acts on a functor as tr_H^G ∘ α^*.
/// Pairs (H, α), (gHg^-1, α ∘ c_g^-1) and (H, c_k ∘ α) are identified; the
/// representative has H a lattice class representative and the least tuple
/// of generator images.
class MorphismBasis {
 public:
  struct Pair {
    std::size_t subgroup_class;
    GroupPtr subgroup;
    GroupHom hom;
  };

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  /// Index of the class of (sub ≤ target, hom : sub -> source).
  std::size_t canonical_index(const GroupHom& hom) const;
  std::string label(std::size_t i) const;

 private:
  friend class BurnsideCategory;
  using Tuple = std::vector<std::uint32_t>;
  struct TupleHash {
    std::size_t operator()(const Tuple& t) const;
  };

  GroupPtr source_;
  GroupPtr target_;
  std::shared_ptr<const SubgroupLattice> lattice_;
  std::vector<Pair> pairs_;
  std::vector<std::unordered_map<Tuple, std::size_t, TupleHash>> lookup_;
};

/// An integer combination of basis pairs.
struct Morphism {
  std::shared_ptr<const MorphismBasis> basis;
  ZVector coefficients;

  const GroupPtr& source() const { return basis->source(); }
  const GroupPtr& target() const { return basis->target(); }
  bool is_zero() const;
  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source()->same_group(*b.source()) && a.target()->same_group(*b.target()) &&
           a.coefficients == b.coefficients;
  }
};

/// The Burnside category on finite permutation groups.
class BurnsideCategory {
 public:
  explicit BurnsideCategory(Limits limits = {}) : burnside_(limits) {}

  std::shared_ptr<const MorphismBasis> basis(const GroupPtr& source, const GroupPtr& target) const;
  Morphism zero(const GroupPtr& source, const GroupPtr& target) const;
  Morphism basis_element(const GroupPtr& source, const GroupPtr& target, std::size_t i) const;
  Morphism identity(const GroupPtr& g) const;
  /// α^* : α.target() -> α.source()
  Morphism restriction(const GroupHom& alpha) const;
  /// tr : sub -> group
  Morphism transfer(const GroupPtr& sub, const GroupPtr& group) const;
  /// The class of (sub ≤ target, hom : sub -> source).
  Morphism pair(const GroupPtr& target, const GroupHom& hom) const;

  /// second ∘ first
  Morphism compose(const Morphism& second, const Morphism& first) const;
  Morphism add(const Morphism& a, const Morphism& b) const;

  /// Matrix of the morphism acting on the Burnside functor, F(source) -> F(target).
  ZMatrix action_on_burnside(const Morphism& m) const;
  const BurnsideFunctor& burnside() const { return burnside_; }

 private:
  std::shared_ptr<const MorphismBasis> build_basis(const GroupPtr& source, const GroupPtr& target) const;

  BurnsideFunctor burnside_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::string, std::string>, std::shared_ptr<const MorphismBasis>> bases_;
};

/// The represented functor A(L, -) as a global functor.
class RepresentedFunctor : public GlobalFunctor {
 public:
  RepresentedFunctor(const BurnsideCategory& cat, GroupPtr l) : cat_(cat), l_(std::move(l)) {}

  std::string name() const override { return "A(" + l_->describe() + ",-)"; }
  FreeAbelian value(const GroupPtr& g) const override;
  ZMap res(const GroupHom& alpha) const override;
  ZMap tr(const GroupPtr& sub, const GroupPtr& group) const override;

 private:
  ZMap post_compose(const Morphism& m) const;

  const BurnsideCategory& cat_;
  GroupPtr l_;
};

struct Section {
  int n = 0;
  /// From the exact solver over the morphism basis.
  Morphism solver;
  /// Σ_{k<n} ψ_{k,n}(s_k) for the decomposition s of the identity in A(Σ_{n-1}, -).
  Morphism from_splitting;
  bool solver_verified = false;
  bool splitting_verified = false;
};

/// Sections σ of i_n^* with i_n^* ∘ σ = id. Throws Inconsistency if none
/// exists, CapExceeded past `max_n`.
Section section_of_restriction(const BurnsideCategory& cat, int n, int max_n = 4);

struct ProductSectionReport {
  GroupPtr group;
  int n = 0;
  /// G x σ in A(G x Σ_{n-1}, G x Σ_n)
  Morphism product;
  /// res along G x i_n times the action of G x σ is the identity matrix
  bool action_identity = false;
  /// (G x i_n)^* ∘ (G x σ) is the identity morphism
  bool category_identity = false;
};

ProductSectionReport product_section(const BurnsideCategory& cat, const GroupPtr& g, const Morphism& sigma, int n);

}  // namespace finglobal
