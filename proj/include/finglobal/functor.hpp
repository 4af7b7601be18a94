#pragma once

#include <string>
#include <vector>

#include "finglobal/linalg.hpp"
#include "finglobal/permgroup.hpp"

namespace finglobal {

/// A free abelian group with named basis elements.
struct FreeAbelian {
  std::vector<std::string> labels;

  std::size_t rank() const { return labels.size(); }
  friend bool operator==(const FreeAbelian&, const FreeAbelian&) = default;
};

/// A homomorphism of free abelian groups; matrix is target rank x source rank.
struct ZMap {
  FreeAbelian source;
  FreeAbelian target;
  ZMatrix matrix;

  static ZMap identity(const FreeAbelian& a);
  static ZMap zero(const FreeAbelian& source, const FreeAbelian& target);
  bool is_identity() const;
  friend bool operator==(const ZMap&, const ZMap&) = default;
};

/// outer ∘ inner
ZMap compose(const ZMap& outer, const ZMap& inner);
ZMap operator+(const ZMap& a, const ZMap& b);
ZMap operator-(const ZMap& a, const ZMap& b);

/// Values, restrictions and transfers of a global functor on finite
/// permutation groups. Implementations memoize and are safe to share.
class GlobalFunctor {
 public:
  virtual ~GlobalFunctor() = default;

  virtual std::string name() const = 0;
  virtual FreeAbelian value(const GroupPtr& g) const = 0;
  /// F(α^*) : F(target) -> F(source)
  virtual ZMap res(const GroupHom& alpha) const = 0;
  /// tr : F(sub) -> F(group) for sub ≤ group of equal degree.
  virtual ZMap tr(const GroupPtr& sub, const GroupPtr& group) const = 0;
};

/// Transfer along an injective homomorphism: tr_{α(H)} composed with
/// restriction along the inverse isomorphism.
ZMap transfer_along(const GlobalFunctor& f, const GroupHom& mono);

}  // namespace finglobal
