#pragma once

#include "finglobal/functor.hpp"

namespace testing_support {

// Adds `delta` to entry (0, 0) of tr(e <= Σ2); everything else delegates.
class CorruptedTransfer : public finglobal::GlobalFunctor {
 public:
  CorruptedTransfer(const finglobal::GlobalFunctor& base, std::int64_t delta) : base_(base), delta_(delta) {}

  std::string name() const override { return base_.name() + "+fault"; }
  finglobal::FreeAbelian value(const finglobal::GroupPtr& g) const override { return base_.value(g); }
  finglobal::ZMap res(const finglobal::GroupHom& alpha) const override { return base_.res(alpha); }
  finglobal::ZMap tr(const finglobal::GroupPtr& sub, const finglobal::GroupPtr& group) const override {
    finglobal::ZMap m = base_.tr(sub, group);
    if (sub->order() == 1 && group->same_group(*finglobal::symmetric_group(2))) m.matrix(0, 0) += delta_;
    return m;
  }

 private:
  const finglobal::GlobalFunctor& base_;
  std::int64_t delta_;
};

}  // namespace testing_support
