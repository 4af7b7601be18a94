#include "finglobal/burnside.hpp"

#include "finglobal/errors.hpp"

namespace finglobal {

namespace {

constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);

// Left cosets g H as ids per element, plus one representative per coset.
struct Cosets {
  std::vector<std::uint32_t> id_of;
  std::vector<std::uint32_t> reps;
};

Cosets left_cosets(const SubgroupLattice& lattice, const ElementSet& sub) {
  const std::size_t n = lattice.group()->order();
  const auto members = sub.indices();
  Cosets c{std::vector<std::uint32_t>(n, kUnset), {}};
  for (std::uint32_t g = 0; g < n; ++g) {
    if (c.id_of[g] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(c.reps.size());
    c.reps.push_back(g);
    for (auto h : members) c.id_of[lattice.mul(g, h)] = id;
  }
  return c;
}

}  // namespace

std::string burnside_label(const PermGroup& sub) {
  std::string s = "[G/";
  if (sub.order() == 1) return s + "1]";
  s += "<";
  for (std::size_t i = 0; i < sub.generators().size(); ++i) s += (i ? "," : "") + sub.generators()[i].to_string();
  return s + ">]";
}

std::shared_ptr<const SubgroupLattice> BurnsideFunctor::lattice(const GroupPtr& g) const {
  std::lock_guard lock(mutex_);
  auto it = lattices_.find(g->key());
  if (it != lattices_.end()) return it->second;
  auto built = std::make_shared<const SubgroupLattice>(g, limits_.max_lattice_order);
  return lattices_.emplace(g->key(), std::move(built)).first->second;
}

FreeAbelian BurnsideFunctor::value(const GroupPtr& g) const {
  FreeAbelian v;
  for (const auto& c : lattice(g)->classes()) v.labels.push_back(burnside_label(*c.representative));
  return v;
}

ZMap BurnsideFunctor::res(const GroupHom& alpha) const {
  auto lg = lattice(alpha.target());
  auto lk = lattice(alpha.source());
  ZMap out = ZMap::zero(value(alpha.target()), value(alpha.source()));
  const PermGroup& k = *alpha.source();
  std::vector<std::uint32_t> gen_images;
  for (const Perm& s : k.generators()) gen_images.push_back(alpha(k.index_of(s)));

  for (std::size_t j = 0; j < lg->size(); ++j) {
    const Cosets cosets = left_cosets(*lg, lg->classes()[j].elements);
    std::vector<bool> visited(cosets.reps.size(), false);
    for (std::uint32_t start = 0; start < cosets.reps.size(); ++start) {
      if (visited[start]) continue;
      std::vector<std::uint32_t> queue{start};
      visited[start] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (auto a : gen_images) {
          const std::uint32_t next = cosets.id_of[lg->mul(a, cosets.reps[queue[q]])];
          if (!visited[next]) {
            visited[next] = true;
            queue.push_back(next);
          }
        }
      }
      ElementSet stabilizer(k.order());
      const std::uint32_t rep = cosets.reps[start];
      for (std::uint32_t x = 0; x < k.order(); ++x) {
        if (cosets.id_of[lg->mul(alpha(x), rep)] == start) stabilizer.insert(x);
      }
      if (stabilizer.count() * queue.size() != k.order()) throw Inconsistency("orbit-stabilizer count failed");
      const auto match = lk->identify(stabilizer);
      out.matrix(match.class_index, j) = checked_add(out.matrix(match.class_index, j), 1);
    }
  }
  return out;
}

ZMap BurnsideFunctor::tr(const GroupPtr& sub, const GroupPtr& group) const {
  if (!sub->is_subgroup_of(*group)) throw InvalidInput("transfer from a non-subgroup");
  auto lh = lattice(sub);
  auto lg = lattice(group);
  ZMap out = ZMap::zero(value(sub), value(group));
  for (std::size_t i = 0; i < lh->size(); ++i) {
    const auto match = lg->identify(*lh->classes()[i].representative);
    out.matrix(match.class_index, i) = 1;
  }
  return out;
}

ZMatrix BurnsideFunctor::marks(const GroupPtr& g) const {
  auto lg = lattice(g);
  const auto& classes = lg->classes();
  ZMatrix m(classes.size(), classes.size());
  for (std::size_t r = 0; r < classes.size(); ++r) {
    const Cosets cosets = left_cosets(*lg, classes[r].elements);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const PermGroup& h = *classes[c].representative;
      std::vector<std::uint32_t> gens;
      for (const Perm& s : h.generators()) gens.push_back(g->index_of(s));
      std::int64_t fixed = 0;
      for (auto rep : cosets.reps) {
        bool all = true;
        for (auto s : gens) {
          if (cosets.id_of[lg->mul(s, rep)] != cosets.id_of[rep]) {
            all = false;
            break;
          }
        }
        if (all) ++fixed;
      }
      m(r, c) = fixed;
    }
  }
  return m;
}

}  // namespace finglobal
