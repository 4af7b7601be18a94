#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "finglobal/charfun.hpp"
#include "finglobal/functor.hpp"

namespace finglobal {

/// The complex representation ring functor on products of symmetric
/// groups. F(G) has basis the irreducible characters.
class RepRingFunctor : public GlobalFunctor {
 public:
  /// `max_degree` bounds the number of points of any group evaluated.
  explicit RepRingFunctor(int max_degree = 8) : max_degree_(max_degree) {}

  std::string name() const override { return "repring"; }
  FreeAbelian value(const GroupPtr& g) const override;
  ZMap res(const GroupHom& alpha) const override;
  ZMap tr(const GroupPtr& sub, const GroupPtr& group) const override;

  /// Throws InvalidInput for unsupported groups.
  std::shared_ptr<const CharacterTable> table(const GroupPtr& g) const;

 private:
  int max_degree_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const CharacterTable>> tables_;
};

}  // namespace finglobal
