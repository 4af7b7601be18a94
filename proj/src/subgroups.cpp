#include "finglobal/subgroups.hpp"

#include <algorithm>
#include <bit>

#include "finglobal/errors.hpp"

namespace finglobal {

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::uint32_t> ElementSet::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

namespace {

struct Candidate {
  ElementSet elements;
  std::vector<std::uint32_t> generators;
  std::vector<std::uint32_t> least_conjugate;
  std::size_t conjugates = 0;
};

}  // namespace

SubgroupLattice::SubgroupLattice(GroupPtr group, std::size_t cap) : group_(std::move(group)), order_(group_->order()) {
  if (order_ > cap) {
    throw CapExceeded("subgroup lattice needs group order <= " + std::to_string(cap) + ", got " +
                      std::to_string(order_));
  }
  const auto n = static_cast<std::uint32_t>(order_);
  table_.resize(order_ * order_);
  inverse_.resize(order_);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      table_[a * order_ + b] = group_->index_of(group_->element(a) * group_->element(b));
    }
    inverse_[a] = group_->index_of(group_->element(a).inverse());
  }

  // Cyclic subgroups, one generator each.
  std::vector<std::pair<ElementSet, std::uint32_t>> cyclic;
  {
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    for (std::uint32_t g = 0; g < n; ++g) {
      ElementSet s(order_);
      std::uint32_t x = 0;
      do {
        s.insert(x);
        x = mul(g, x);
      } while (x != 0);
      if (seen.emplace(s, cyclic.size()).second) cyclic.emplace_back(std::move(s), g);
    }
  }

  std::vector<Candidate> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> class_of;
  auto register_class = [&](ElementSet s, std::vector<std::uint32_t> gens) {
    Candidate c;
    c.generators = std::move(gens);
    for (std::uint32_t g = 0; g < n; ++g) {
      ElementSet conj = conjugate(s, g);
      auto [it, fresh] = class_of.emplace(conj, found.size());
      if (!fresh) continue;
      ++c.conjugates;
      std::vector<std::uint32_t> idx = conj.indices();
      if (c.least_conjugate.empty() || idx < c.least_conjugate) c.least_conjugate = std::move(idx);
    }
    c.elements = std::move(s);
    found.push_back(std::move(c));
  };

  {
    ElementSet trivial(order_);
    trivial.insert(0);
    register_class(std::move(trivial), {});
  }
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (const auto& [cyc, c] : cyclic) {
      if (found[next].elements.contains(c)) continue;
      std::vector<std::uint32_t> gens = found[next].generators;
      gens.push_back(c);
      ElementSet joined = found[next].elements;
      std::vector<std::uint32_t> members = joined.indices();
      for (std::size_t q = 0; q < members.size(); ++q) {
        for (std::uint32_t t : gens) {
          const std::uint32_t y = mul(t, members[q]);
          if (!joined.contains(y)) {
            joined.insert(y);
            members.push_back(y);
          }
        }
      }
      if (!class_of.count(joined)) register_class(std::move(joined), std::move(gens));
    }
  }

  std::vector<std::size_t> order_idx(found.size());
  for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& ka = found[a].least_conjugate;
    const auto& kb = found[b].least_conjugate;
    if (ka.size() != kb.size()) return ka.size() < kb.size();
    return ka < kb;
  });

  for (std::size_t pos = 0; pos < order_idx.size(); ++pos) {
    const Candidate& cand = found[order_idx[pos]];
    ElementSet rep_set(order_);
    std::vector<Perm> elems;
    for (std::uint32_t i : cand.least_conjugate) {
      rep_set.insert(i);
      elems.push_back(group_->element(i));
    }
    SubgroupClass cls;
    cls.representative = PermGroup::from_elements(group_->degree(), std::move(elems));
    cls.elements = rep_set;
    cls.conjugates = cand.conjugates;
    for (std::uint32_t g = 0; g < n; ++g) lookup_.emplace(conjugate(rep_set, g), Match{pos, g});
    classes_.push_back(std::move(cls));
  }
}

ElementSet SubgroupLattice::conjugate(const ElementSet& s, std::uint32_t g) const {
  ElementSet out(order_);
  const std::uint32_t gi = inverse_[g];
  for (std::uint32_t x : s.indices()) out.insert(mul(mul(g, x), gi));
  return out;
}

SubgroupLattice::Match SubgroupLattice::identify(const ElementSet& subgroup) const {
  auto it = lookup_.find(subgroup);
  if (it != lookup_.end()) return it->second;
  const auto idx = subgroup.indices();
  for (std::uint32_t a : idx) {
    for (std::uint32_t b : idx) {
      if (!subgroup.contains(mul(a, b))) throw InvalidInput("element set is not a subgroup");
    }
  }
  throw Inconsistency("subgroup missing from the enumerated lattice");
}

ElementSet SubgroupLattice::element_set(const PermGroup& subgroup) const {
  ElementSet s(order_);
  for (const Perm& p : subgroup.elements()) {
    auto i = group_->find(p);
    if (!i) throw InvalidInput("subgroup containment violated");
    s.insert(*i);
  }
  return s;
}

GroupPtr SubgroupLattice::subgroup(const ElementSet& s) const {
  std::vector<Perm> elems;
  for (std::uint32_t i : s.indices()) elems.push_back(group_->element(i));
  return PermGroup::from_elements(group_->degree(), std::move(elems));
}

std::vector<GroupPtr> subgroup_classes(GroupPtr group, std::size_t cap) {
  SubgroupLattice lattice(std::move(group), cap);
  std::vector<GroupPtr> out;
  for (const auto& c : lattice.classes()) out.push_back(c.representative);
  return out;
}

}  // namespace finglobal
