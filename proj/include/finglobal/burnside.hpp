#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "finglobal/functor.hpp"
#include "finglobal/subgroups.hpp"

namespace finglobal {

/// The Burnside ring functor: F(G) has basis the transitive G-sets [G/H],
/// one per subgroup class in lattice order.
class BurnsideFunctor : public GlobalFunctor {
 public:
  explicit BurnsideFunctor(Limits limits = {}) : limits_(limits) {}

  std::string name() const override { return "burnside"; }
  FreeAbelian value(const GroupPtr& g) const override;
  ZMap res(const GroupHom& alpha) const override;
  ZMap tr(const GroupPtr& sub, const GroupPtr& group) const override;

  std::shared_ptr<const SubgroupLattice> lattice(const GroupPtr& g) const;
  /// Table of marks: entry (r, c) = |(G/K_r)^{H_c}|, lower triangular.
  ZMatrix marks(const GroupPtr& g) const;

 private:
  Limits limits_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const SubgroupLattice>> lattices_;
};

std::string burnside_label(const PermGroup& sub);

}  // namespace finglobal
