#include "finglobal/repring.hpp"

#include "finglobal/errors.hpp"

namespace finglobal {

namespace {

ZVector coordinates(const ClassFunction& phi, const CharacterTable& table) {
  try {
    return decompose_into_irreducibles(phi, table);
  } catch (const InvalidInput& e) {
    throw Inconsistency(std::string("representation ring map: ") + e.what());
  }
}

}  // namespace

std::shared_ptr<const CharacterTable> RepRingFunctor::table(const GroupPtr& g) const {
  {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(g->key());
    if (it != tables_.end()) return it->second;
  }
  if (g->degree() > max_degree_ && g->order() > 1) {
    throw CapExceeded("representation ring is capped at degree " + std::to_string(max_degree_));
  }
  if (!symmetric_blocks(*g)) throw InvalidInput("unsupported group family for the representation ring: " + g->describe());
  auto built = std::make_shared<const CharacterTable>(char_table_young(g));
  std::lock_guard lock(mutex_);
  return tables_.emplace(g->key(), std::move(built)).first->second;
}

FreeAbelian RepRingFunctor::value(const GroupPtr& g) const {
  FreeAbelian v;
  for (const auto& label : table(g)->labels) v.labels.push_back("chi" + to_string(label));
  return v;
}

ZMap RepRingFunctor::res(const GroupHom& alpha) const {
  auto target = table(alpha.target());
  auto source = table(alpha.source());
  ZMap out = ZMap::zero(value(alpha.target()), value(alpha.source()));
  for (std::size_t j = 0; j < target->size(); ++j) {
    const ZVector c = coordinates(restrict_classfunction(target->irreducibles[j], alpha, source->classes), *source);
    for (std::size_t i = 0; i < c.size(); ++i) out.matrix(i, j) = c[i];
  }
  return out;
}

ZMap RepRingFunctor::tr(const GroupPtr& sub, const GroupPtr& group) const {
  auto h = table(sub);
  auto g = table(group);
  ZMap out = ZMap::zero(value(sub), value(group));
  const auto induced = induce_classfunctions(h->irreducibles, g->classes);
  for (std::size_t j = 0; j < induced.size(); ++j) {
    const ZVector c = coordinates(induced[j], *g);
    for (std::size_t i = 0; i < c.size(); ++i) out.matrix(i, j) = c[i];
  }
  return out;
}

}  // namespace finglobal
