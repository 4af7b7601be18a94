#include "finglobal/permgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "finglobal/errors.hpp"

namespace finglobal {

namespace {

constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap) {
    throw CapExceeded("group order exceeds the configured cap of " + std::to_string(cap));
  }
}

}  // namespace

// ---- PermGroup ---------------------------------------------------------------

PermGroup::PermGroup(Token, int degree, std::vector<Perm> generators, std::vector<Perm> sorted_elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {
  index_.reserve(elements_.size() * 2);
  key_.reserve(1 + elements_.size() * 8);
  key_.push_back(static_cast<char>(degree_));
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    const std::uint64_t k = elements_[i].key();
    index_.emplace(k, i);
    for (int b = 0; b < 8; ++b) key_.push_back(static_cast<char>((k >> (8 * b)) & 0xff));
  }
}

std::vector<Perm> close_elements(int degree, std::span<const Perm> generators, std::size_t cap) {
  std::vector<Perm> out{Perm(degree)};
  std::unordered_set<std::uint64_t> seen{out.front().key()};
  for (const Perm& s : generators) {
    if (s.degree() != degree) throw InvalidInput("generator degree does not match group degree");
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Perm& s : generators) {
      Perm y = s * out[i];
      if (seen.insert(y.key()).second) {
        out.push_back(y);
        check_cap(out.size(), cap);
      }
    }
  }
  return out;
}

GroupPtr PermGroup::generate(int degree, std::vector<Perm> generators, std::size_t cap) {
  std::vector<Perm> elements = close_elements(degree, generators, cap);
  std::sort(elements.begin(), elements.end());
  return std::make_shared<const PermGroup>(Token{}, degree, std::move(generators), std::move(elements));
}

GroupPtr close_generators(int degree, std::vector<Perm> generators, std::size_t cap) {
  return PermGroup::generate(degree, std::move(generators), cap);
}

GroupPtr PermGroup::from_elements(int degree, std::vector<Perm> elements, std::vector<Perm> generators) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity()) throw InvalidInput("element list lacks the identity");
  if (generators.empty()) generators = small_generating_set(degree, elements);
  return std::make_shared<const PermGroup>(Token{}, degree, std::move(generators), std::move(elements));
}

std::optional<std::uint32_t> PermGroup::find(const Perm& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = index_.find(p.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t PermGroup::index_of(const Perm& p) const {
  auto i = find(p);
  if (!i) throw InvalidInput("permutation " + p.to_string() + " is not in the group " + describe());
  return *i;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (g.degree_ != degree_ || g.order() % order() != 0) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& p) { return g.contains(p); });
}

std::string PermGroup::describe() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out << ", ";
    out << generators_[i].to_string();
  }
  out << "> of order " << order() << " on " << degree_ << " points";
  return out.str();
}

std::vector<Perm> small_generating_set(int degree, std::span<const Perm> elements) {
  const std::size_t n = elements.size();
  if (n <= 1) return {};
  std::vector<Perm> candidates(elements.begin(), elements.end());
  std::sort(candidates.begin(), candidates.end(), [](const Perm& a, const Perm& b) {
    const int oa = a.order(), ob = b.order();
    return oa != ob ? oa > ob : a < b;
  });
  auto span_size = [&](const std::vector<Perm>& gens) { return close_elements(degree, gens, n).size(); };

  std::vector<Perm> gens;
  std::unordered_set<std::uint64_t> current{Perm(degree).key()};
  for (const Perm& c : candidates) {
    if (current.count(c.key())) continue;
    gens.push_back(c);
    auto closed = close_elements(degree, gens, n);
    current.clear();
    for (const Perm& p : closed) current.insert(p.key());
    if (closed.size() == n) break;
  }
  for (std::size_t i = gens.size(); i-- > 0 && gens.size() > 1;) {
    std::vector<Perm> fewer = gens;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    if (span_size(fewer) == n) gens = std::move(fewer);
  }
  if (gens.size() > 2 && n <= 128) {
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t b = a + 1; b < candidates.size(); ++b) {
        std::vector<Perm> pair{candidates[a], candidates[b]};
        if (span_size(pair) == n) return pair;
      }
    }
  }
  return gens;
}

// ---- GroupHom ----------------------------------------------------------------

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<std::uint32_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_->order()) throw InvalidInput("homomorphism map has wrong length");
  for (std::uint32_t v : map_) {
    if (v >= target_->order()) throw InvalidInput("homomorphism image out of range");
  }
  for (const Perm& s : source_->generators()) {
    const std::uint32_t si = source_->index_of(s);
    const Perm& fs = target_->element(map_[si]);
    for (std::uint32_t x = 0; x < source_->order(); ++x) {
      const std::uint32_t sx = source_->index_of(s * source_->element(x));
      if (target_->element(map_[sx]) != fs * target_->element(map_[x])) {
        throw InvalidInput("map is not a homomorphism");
      }
    }
  }
  if (!target_->element(map_[0]).is_identity()) throw InvalidInput("map does not preserve the identity");
}

std::optional<GroupHom> GroupHom::from_generator_images(GroupPtr source, GroupPtr target,
                                                         std::span<const std::uint32_t> images) {
  const auto& gens = source->generators();
  if (images.size() != gens.size()) throw InvalidInput("need one image per generator");
  std::vector<std::uint32_t> map(source->order(), kUnset);
  map[0] = 0;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::uint32_t x = queue[q];
    const Perm& fx = target->element(map[x]);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const std::uint32_t y = source->index_of(gens[j] * source->element(x));
      const std::uint32_t img = target->index_of(target->element(images[j]) * fx);
      if (map[y] == kUnset) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return std::nullopt;
      }
    }
  }
  return GroupHom(Unchecked{}, std::move(source), std::move(target), std::move(map));
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<std::uint32_t> map(g->order());
  std::iota(map.begin(), map.end(), 0u);
  return GroupHom(Unchecked{}, g, g, std::move(map));
}

GroupHom GroupHom::inclusion(GroupPtr sub, GroupPtr group) {
  if (sub->degree() != group->degree()) throw InvalidInput("inclusion requires equal degrees");
  std::vector<std::uint32_t> map(sub->order());
  for (std::uint32_t i = 0; i < sub->order(); ++i) {
    auto j = group->find(sub->element(i));
    if (!j) throw InvalidInput("subgroup containment violated");
    map[i] = *j;
  }
  return GroupHom(Unchecked{}, std::move(sub), std::move(group), std::move(map));
}

GroupHom GroupHom::embedding(GroupPtr sub, GroupPtr group) {
  if (sub->degree() > group->degree()) throw InvalidInput("embedding into a smaller degree");
  std::vector<std::uint32_t> map(sub->order());
  for (std::uint32_t i = 0; i < sub->order(); ++i) {
    auto j = group->find(sub->element(i).extended(group->degree()));
    if (!j) throw InvalidInput("embedded element is not in the target group");
    map[i] = *j;
  }
  return GroupHom(Unchecked{}, std::move(sub), std::move(group), std::move(map));
}

GroupHom GroupHom::conjugation(GroupPtr source, GroupPtr target, const Perm& g) {
  const Perm ginv = g.inverse();
  std::vector<std::uint32_t> map(source->order());
  for (std::uint32_t i = 0; i < source->order(); ++i) {
    auto j = target->find(g * source->element(i) * ginv);
    if (!j) throw InvalidInput("conjugate does not lie in the target group");
    map[i] = *j;
  }
  return GroupHom(Unchecked{}, std::move(source), std::move(target), std::move(map));
}

GroupHom GroupHom::trivial(GroupPtr source, GroupPtr target) {
  std::vector<std::uint32_t> map(source->order(), 0u);
  return GroupHom(Unchecked{}, std::move(source), std::move(target), std::move(map));
}

GroupHom GroupHom::then(const GroupHom& next) const {
  if (!target_->same_group(*next.source_)) throw InvalidInput("homomorphisms are not composable");
  std::vector<std::uint32_t> map(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) map[i] = next.map_[map_[i]];
  return GroupHom(Unchecked{}, source_, next.target_, std::move(map));
}

GroupHom GroupHom::restrict_to(GroupPtr sub) const {
  std::vector<std::uint32_t> map(sub->order());
  for (std::uint32_t i = 0; i < sub->order(); ++i) {
    auto j = source_->find(sub->element(i));
    if (!j) throw InvalidInput("restriction to a non-subgroup");
    map[i] = map_[*j];
  }
  return GroupHom(Unchecked{}, std::move(sub), target_, std::move(map));
}

GroupHom GroupHom::corestrict_to(GroupPtr new_target) const {
  std::vector<std::uint32_t> map(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) {
    auto j = new_target->find(target_->element(map_[i]));
    if (!j) throw InvalidInput("image does not lie in the new target");
    map[i] = *j;
  }
  return GroupHom(Unchecked{}, source_, std::move(new_target), std::move(map));
}

bool GroupHom::is_injective() const {
  std::vector<std::uint32_t> sorted = map_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(target_->order(), false);
  for (std::uint32_t v : map_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GroupPtr GroupHom::image() const {
  std::vector<std::uint32_t> idx = map_;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<Perm> elems;
  elems.reserve(idx.size());
  for (std::uint32_t i : idx) elems.push_back(target_->element(i));
  std::vector<Perm> gens;
  for (const Perm& s : source_->generators()) gens.push_back((*this)(s));
  return PermGroup::from_elements(target_->degree(), std::move(elems),
                                  idx.size() == 1 ? std::vector<Perm>{} : std::move(gens));
}

GroupPtr GroupHom::preimage(const PermGroup& sub) const {
  std::vector<Perm> elems;
  for (std::uint32_t i = 0; i < map_.size(); ++i) {
    if (sub.contains(target_->element(map_[i]))) elems.push_back(source_->element(i));
  }
  return PermGroup::from_elements(source_->degree(), std::move(elems));
}

bool GroupHom::verify_full() const {
  for (std::uint32_t x = 0; x < source_->order(); ++x) {
    for (std::uint32_t y = 0; y < source_->order(); ++y) {
      const std::uint32_t xy = source_->index_of(source_->element(x) * source_->element(y));
      if (target_->element(map_[xy]) != target_->element(map_[x]) * target_->element(map_[y])) return false;
    }
  }
  return target_->element(map_[0]).is_identity();
}

// ---- standard groups -----------------------------------------------------------

namespace {

GroupPtr memoized(const std::string& name, std::size_t cap, const std::function<GroupPtr()>& build) {
  static std::mutex mutex;
  static std::map<std::string, GroupPtr> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(name);
    if (it != memo.end()) {
      check_cap(it->second->order(), cap);
      return it->second;
    }
  }
  GroupPtr g = build();
  std::lock_guard lock(mutex);
  return memo.emplace(name, std::move(g)).first->second;
}

void add_block_generators(std::vector<Perm>& gens, int degree, int offset, int size) {
  if (size < 2) return;
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[static_cast<std::size_t>(offset)], img[static_cast<std::size_t>(offset + 1)]);
  gens.push_back(Perm::from_images(img));
  if (size > 2) {
    std::iota(img.begin(), img.end(), 1);
    for (int i = 0; i < size; ++i) img[static_cast<std::size_t>(offset + i)] = offset + (i + 1) % size + 1;
    gens.push_back(Perm::from_images(img));
  }
}

}  // namespace

GroupPtr extend_degree(const PermGroup& g, int degree) {
  if (degree < g.degree()) throw InvalidInput("cannot lower the degree of a group");
  if (degree == g.degree()) return PermGroup::from_elements(degree, g.elements(), g.generators());
  std::vector<Perm> elems, gens;
  for (const Perm& x : g.elements()) elems.push_back(x.extended(degree));
  for (const Perm& x : g.generators()) gens.push_back(x.extended(degree));
  return PermGroup::from_elements(degree, std::move(elems), std::move(gens));
}

GroupPtr trivial_group(int degree) { return PermGroup::from_elements(degree, {Perm(degree)}, {}); }

GroupPtr symmetric_group(int n, std::size_t cap) {
  if (n < 0) throw InvalidInput("negative symmetric group index");
  return memoized("S" + std::to_string(n), cap, [&] {
    const int d = std::max(n, 1);
    std::vector<Perm> gens;
    add_block_generators(gens, d, 0, n);
    return PermGroup::generate(d, std::move(gens), cap);
  });
}

GroupPtr alternating_group(int n, std::size_t cap) {
  if (n < 0) throw InvalidInput("negative alternating group index");
  return memoized("A" + std::to_string(n), cap, [&] {
    const int d = std::max(n, 1);
    std::vector<Perm> gens;
    for (int i = 0; i + 2 < n; ++i) {
      std::vector<int> img(static_cast<std::size_t>(d));
      std::iota(img.begin(), img.end(), 1);
      img[static_cast<std::size_t>(i)] = i + 2;
      img[static_cast<std::size_t>(i + 1)] = i + 3;
      img[static_cast<std::size_t>(i + 2)] = i + 1;
      gens.push_back(Perm::from_images(img));
    }
    return PermGroup::generate(d, std::move(gens), cap);
  });
}

GroupPtr young_subgroup(std::span<const int> blocks, std::size_t cap) {
  std::vector<int> sizes;
  std::string name = "Y";
  for (int b : blocks) {
    if (b < 0) throw InvalidInput("negative block size");
    if (b > 0) {
      sizes.push_back(b);
      name += "," + std::to_string(b);
    }
  }
  return memoized(name, cap, [&] {
    const int d = std::max(1, std::accumulate(sizes.begin(), sizes.end(), 0));
    std::vector<Perm> gens;
    int offset = 0;
    for (int b : sizes) {
      add_block_generators(gens, d, offset, b);
      offset += b;
    }
    return PermGroup::generate(d, std::move(gens), cap);
  });
}

GroupPtr young_subgroup(int k, int l, std::size_t cap) {
  const int blocks[] = {k, l};
  return young_subgroup(blocks, cap);
}

GroupPtr direct_product(const PermGroup& g, const PermGroup& h, std::size_t cap) {
  check_cap(g.order() * h.order(), cap);
  const int d = g.degree() + h.degree();
  std::vector<Perm> gens;
  for (const Perm& a : g.generators()) gens.push_back(a.extended(d));
  for (const Perm& b : h.generators()) gens.push_back(b.shifted(g.degree(), d));
  std::vector<Perm> elems;
  elems.reserve(g.order() * h.order());
  for (const Perm& a : g.elements()) {
    const Perm ea = a.extended(d);
    for (const Perm& b : h.elements()) elems.push_back(ea * b.shifted(g.degree(), d));
  }
  if (elems.size() == 1) gens.clear();
  return PermGroup::from_elements(d, std::move(elems), std::move(gens));
}

GroupHom standard_embedding(int n) {
  if (n < 1) throw InvalidInput("standard embedding needs n >= 1");
  return GroupHom::embedding(symmetric_group(n - 1), symmetric_group(n));
}

GroupHom block_projection(GroupPtr group, int first, int count) {
  if (count == 0) return GroupHom::trivial(group, symmetric_group(0));
  return GroupHom::from_function(group, symmetric_group(count),
                                 [&](const Perm& p) { return p.restricted(first, count); });
}

GroupHom product_hom(GroupPtr source, GroupPtr target, const GroupHom& left, const GroupHom& right) {
  const int da = left.source()->degree();
  const int db = right.source()->degree();
  const int dc = left.target()->degree();
  const int d = target->degree();
  if (source->degree() != da + db || d != dc + right.target()->degree()) {
    throw InvalidInput("product homomorphism degrees do not match");
  }
  return GroupHom::from_function(source, target, [&](const Perm& p) {
    return left(p.restricted(0, da)).extended(d) * right(p.restricted(da, db)).shifted(dc, d);
  });
}

// ---- algorithms ------------------------------------------------------------------

std::shared_ptr<const ConjugacyClasses> conjugacy_classes(GroupPtr g) {
  auto cc = std::make_shared<ConjugacyClasses>();
  cc->group = g;
  const std::size_t n = g->order();
  cc->class_of.assign(n, kUnset);
  std::vector<Perm> gens = g->generators();
  std::vector<Perm> inverses;
  for (const Perm& s : gens) inverses.push_back(s.inverse());
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cc->class_of[i] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(cc->representatives.size());
    cc->representatives.push_back(g->element(i));
    std::vector<std::uint32_t> queue{i};
    cc->class_of[i] = c;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Perm& x = g->element(queue[q]);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::uint32_t y = g->index_of(gens[j] * x * inverses[j]);
        if (cc->class_of[y] == kUnset) {
          cc->class_of[y] = c;
          queue.push_back(y);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    cc->members.push_back(std::move(queue));
  }
  return cc;
}

std::vector<Perm> double_cosets(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g)) throw InvalidInput("double cosets need subgroups of the ambient group");
  std::vector<bool> assigned(g.order(), false);
  std::vector<Perm> reps;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (assigned[i]) continue;
    reps.push_back(g.element(i));
    assigned[i] = true;
    std::vector<std::uint32_t> queue{i};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Perm& x = g.element(queue[q]);
      auto visit = [&](const Perm& y) {
        const std::uint32_t yi = g.index_of(y);
        if (!assigned[yi]) {
          assigned[yi] = true;
          queue.push_back(yi);
        }
      };
      for (const Perm& s : h.generators()) visit(s * x);
      for (const Perm& t : k.generators()) visit(x * t);
    }
  }
  return reps;
}

std::vector<std::pair<Perm, Perm>> fused_pairs(GroupPtr sub, GroupPtr group) {
  if (sub->degree() < group->degree()) sub = extend_degree(*sub, group->degree());
  if (!sub->is_subgroup_of(*group)) throw InvalidInput("fusion needs a subgroup");
  auto sub_classes = conjugacy_classes(sub);
  auto classes = conjugacy_classes(group);
  std::vector<std::size_t> ambient(sub_classes->size());
  for (std::size_t i = 0; i < sub_classes->size(); ++i) {
    ambient[i] = classes->class_index(sub_classes->representatives[i]);
  }
  std::vector<std::pair<Perm, Perm>> pairs;
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    for (std::size_t j = i + 1; j < ambient.size(); ++j) {
      if (ambient[i] == ambient[j]) pairs.emplace_back(sub_classes->representatives[i], sub_classes->representatives[j]);
    }
  }
  return pairs;
}

GroupPtr centralizer(const PermGroup& g, const Perm& x) {
  std::vector<Perm> elems;
  for (const Perm& y : g.elements())
    if (y * x == x * y) elems.push_back(y);
  return PermGroup::from_elements(g.degree(), std::move(elems));
}

GroupPtr normalizer(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw InvalidInput("normalizer needs a subgroup");
  std::vector<Perm> elems;
  for (const Perm& y : g.elements()) {
    const bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                        [&](const Perm& s) { return h.contains(y.conjugate(s)); });
    if (normalizes) elems.push_back(y);
  }
  return PermGroup::from_elements(g.degree(), std::move(elems));
}

std::size_t weyl_order(const PermGroup& g, const PermGroup& h) { return normalizer(g, h)->order() / h.order(); }

GroupPtr intersection(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw InvalidInput("intersection needs equal degrees");
  std::vector<Perm> elems;
  for (const Perm& x : a.elements())
    if (b.contains(x)) elems.push_back(x);
  return PermGroup::from_elements(a.degree(), std::move(elems));
}

GroupPtr conjugate_subgroup(const PermGroup& h, const Perm& g) {
  std::vector<Perm> elems;
  elems.reserve(h.order());
  for (const Perm& x : h.elements()) elems.push_back(g.conjugate(x));
  std::vector<Perm> gens;
  for (const Perm& s : h.generators()) gens.push_back(g.conjugate(s));
  return PermGroup::from_elements(h.degree(), std::move(elems), std::move(gens));
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  const int d = g.degree();
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const Perm& s : g.generators()) {
    for (int i = 0; i < d; ++i) {
      const int a = root(i), b = root(s[i]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < d; ++i) by_root[root(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, pts] : by_root) out.push_back(std::move(pts));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace finglobal
