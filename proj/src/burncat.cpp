#include "finglobal/burncat.hpp"

#include "finglobal/errors.hpp"
#include "finglobal/split.hpp"

namespace finglobal {

std::size_t MorphismBasis::TupleHash::operator()(const Tuple& t) const {
  std::size_t h = t.size();
  for (auto v : t) h = h * 1000003u ^ v;
  return h;
}

std::size_t MorphismBasis::canonical_index(const GroupHom& hom) const {
  if (!hom.target()->same_group(*source_)) throw InvalidInput("pair map does not land in the source group");
  const auto match = lattice_->identify(*hom.source());
  const PermGroup& rep = *lattice_->classes()[match.class_index].representative;
  const Perm& g = target_->element(match.conjugator);
  Tuple t;
  for (const Perm& s : rep.generators()) t.push_back(source_->index_of(hom(g.conjugate(s))));
  const auto& table = lookup_[match.class_index];
  auto it = table.find(t);
  if (it == table.end()) throw Inconsistency("pair is missing from the morphism basis");
  return it->second;
}

std::string MorphismBasis::label(std::size_t i) const {
  const Pair& p = pairs_[i];
  std::string s = "(" + burnside_label(*p.subgroup) + ", ";
  const auto& gens = p.subgroup->generators();
  s += "[";
  for (std::size_t j = 0; j < gens.size(); ++j) s += (j ? "," : "") + p.hom(gens[j]).to_string();
  return s + "])";
}

bool Morphism::is_zero() const {
  for (auto c : coefficients)
    if (c != 0) return false;
  return true;
}

std::shared_ptr<const MorphismBasis> BurnsideCategory::build_basis(const GroupPtr& source, const GroupPtr& target) const {
  auto basis = std::make_shared<MorphismBasis>();
  basis->source_ = source;
  basis->target_ = target;
  basis->lattice_ = burnside_.lattice(target);
  const PermGroup& k = *source;
  std::vector<std::uint32_t> k_gens;
  for (const Perm& s : k.generators()) k_gens.push_back(k.index_of(s));

  for (std::size_t c = 0; c < basis->lattice_->size(); ++c) {
    GroupPtr h = basis->lattice_->classes()[c].representative;
    GroupPtr norm = normalizer(*target, *h);
    const auto& gens = h->generators();
    auto& table = basis->lookup_.emplace_back();
    MorphismBasis::Tuple t(gens.size(), 0);
    for (;;) {
      if (!table.count(t)) {
        if (auto alpha = GroupHom::from_generator_images(h, source, t)) {
          const std::size_t index = basis->pairs_.size();
          basis->pairs_.push_back({c, h, *alpha});
          // orbit of the tuple under N_G(H) acting by c_n and K by c_k
          std::vector<GroupHom> queue{*alpha};
          table.emplace(t, index);
          for (std::size_t q = 0; q < queue.size(); ++q) {
            const GroupHom cur = queue[q];
            std::vector<MorphismBasis::Tuple> next;
            for (const Perm& n : norm->generators()) {
              MorphismBasis::Tuple u;
              const Perm inv = n.inverse();
              for (const Perm& s : gens) u.push_back(source->index_of(cur(inv.conjugate(s))));
              next.push_back(std::move(u));
            }
            for (auto kg : k_gens) {
              MorphismBasis::Tuple u;
              const Perm& kp = k.element(kg);
              for (const Perm& s : gens) u.push_back(k.index_of(kp.conjugate(cur(s))));
              next.push_back(std::move(u));
            }
            for (auto& u : next) {
              if (table.count(u)) continue;
              auto img = GroupHom::from_generator_images(h, source, u);
              if (!img) throw Inconsistency("conjugate of a homomorphism is not a homomorphism");
              table.emplace(u, index);
              queue.push_back(*img);
            }
          }
        }
      }
      // odometer, last generator fastest so tuples run in lexicographic order
      std::size_t pos = t.size();
      while (pos > 0 && ++t[pos - 1] == k.order()) t[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return basis;
}

std::shared_ptr<const MorphismBasis> BurnsideCategory::basis(const GroupPtr& source, const GroupPtr& target) const {
  const auto key = std::pair(source->key(), target->key());
  {
    std::lock_guard lock(mutex_);
    auto it = bases_.find(key);
    if (it != bases_.end()) return it->second;
  }
  auto built = build_basis(source, target);
  std::lock_guard lock(mutex_);
  return bases_.emplace(key, std::move(built)).first->second;
}

Morphism BurnsideCategory::zero(const GroupPtr& source, const GroupPtr& target) const {
  auto b = basis(source, target);
  return Morphism{b, ZVector(b->size(), 0)};
}

Morphism BurnsideCategory::basis_element(const GroupPtr& source, const GroupPtr& target, std::size_t i) const {
  Morphism m = zero(source, target);
  if (i >= m.coefficients.size()) throw InvalidInput("basis index out of range");
  m.coefficients[i] = 1;
  return m;
}

Morphism BurnsideCategory::pair(const GroupPtr& target, const GroupHom& hom) const {
  Morphism m = zero(hom.target(), target);
  m.coefficients[m.basis->canonical_index(hom)] = 1;
  return m;
}

Morphism BurnsideCategory::identity(const GroupPtr& g) const { return pair(g, GroupHom::identity(g)); }

Morphism BurnsideCategory::restriction(const GroupHom& alpha) const { return pair(alpha.source(), alpha); }

Morphism BurnsideCategory::transfer(const GroupPtr& sub, const GroupPtr& group) const {
  if (!sub->is_subgroup_of(*group)) throw InvalidInput("transfer from a non-subgroup");
  return pair(group, GroupHom::identity(sub));
}

Morphism BurnsideCategory::add(const Morphism& a, const Morphism& b) const {
  if (!a.source()->same_group(*b.source()) || !a.target()->same_group(*b.target())) {
    throw InvalidInput("adding morphisms between different groups");
  }
  Morphism out = a;
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
    out.coefficients[i] = checked_add(out.coefficients[i], b.coefficients[i]);
  }
  return out;
}

Morphism BurnsideCategory::compose(const Morphism& second, const Morphism& first) const {
  if (!first.target()->same_group(*second.source())) throw InvalidInput("morphisms are not composable");
  Morphism out = zero(first.source(), second.target());
  const GroupPtr& k = second.source();
  for (std::size_t j = 0; j < second.coefficients.size(); ++j) {
    if (second.coefficients[j] == 0) continue;
    const auto& [jc, jsub, beta] = second.basis->pairs()[j];
    GroupPtr beta_image = beta.image();
    for (std::size_t i = 0; i < first.coefficients.size(); ++i) {
      if (first.coefficients[i] == 0) continue;
      const auto& [ic, h, alpha] = first.basis->pairs()[i];
      const std::int64_t coeff = checked_mul(second.coefficients[j], first.coefficients[i]);
      for (const Perm& x : double_cosets(*k, *beta_image, *h)) {
        GroupPtr conj = conjugate_subgroup(*h, x);
        GroupPtr q = beta.preimage(*conj);
        const Perm xinv = x.inverse();
        GroupHom gamma = GroupHom::from_function(q, alpha.target(),
                                                 [&](const Perm& y) { return alpha(xinv.conjugate(beta(y))); });
        const std::size_t index = out.basis->canonical_index(gamma);
        out.coefficients[index] = checked_add(out.coefficients[index], coeff);
      }
    }
  }
  return out;
}

ZMatrix BurnsideCategory::action_on_burnside(const Morphism& m) const {
  ZMatrix total(burnside_.value(m.target()).rank(), burnside_.value(m.source()).rank());
  for (std::size_t i = 0; i < m.coefficients.size(); ++i) {
    if (m.coefficients[i] == 0) continue;
    const auto& p = m.basis->pairs()[i];
    ZMatrix term = (burnside_.tr(p.subgroup, m.target()).matrix * burnside_.res(p.hom).matrix);
    for (std::size_t r = 0; r < term.rows(); ++r)
      for (std::size_t c = 0; c < term.cols(); ++c) term(r, c) = checked_mul(term(r, c), m.coefficients[i]);
    total = total + term;
  }
  return total;
}

FreeAbelian RepresentedFunctor::value(const GroupPtr& g) const {
  auto b = cat_.basis(l_, g);
  FreeAbelian v;
  for (std::size_t i = 0; i < b->size(); ++i) v.labels.push_back(b->label(i));
  return v;
}

ZMap RepresentedFunctor::post_compose(const Morphism& m) const {
  auto from = cat_.basis(l_, m.source());
  auto to = cat_.basis(l_, m.target());
  ZMap out = ZMap::zero(value(m.source()), value(m.target()));
  for (std::size_t j = 0; j < from->size(); ++j) {
    const Morphism image = cat_.compose(m, cat_.basis_element(l_, m.source(), j));
    for (std::size_t i = 0; i < to->size(); ++i) out.matrix(i, j) = image.coefficients[i];
  }
  return out;
}

ZMap RepresentedFunctor::res(const GroupHom& alpha) const { return post_compose(cat_.restriction(alpha)); }

ZMap RepresentedFunctor::tr(const GroupPtr& sub, const GroupPtr& group) const {
  return post_compose(cat_.transfer(sub, group));
}

Section section_of_restriction(const BurnsideCategory& cat, int n, int max_n) {
  if (n < 1) throw InvalidInput("sections need n >= 1");
  if (n > max_n) throw CapExceeded("sections are capped at n = " + std::to_string(max_n));
  GroupPtr big = symmetric_group(n);
  GroupPtr small = symmetric_group(n - 1);
  const Morphism restrict = cat.restriction(standard_embedding(n));
  const Morphism id = cat.identity(small);
  auto sections = cat.basis(small, big);

  ZMatrix m(id.coefficients.size(), sections->size());
  for (std::size_t j = 0; j < sections->size(); ++j) {
    const Morphism image = cat.compose(restrict, cat.basis_element(small, big, j));
    for (std::size_t i = 0; i < image.coefficients.size(); ++i) m(i, j) = image.coefficients[i];
  }
  auto x = solve_exact(m, id.coefficients);
  if (!x) throw Inconsistency("restriction has no section in the Burnside category at n = " + std::to_string(n));

  Section s{n, Morphism{sections, *x}, cat.zero(small, big)};
  s.solver_verified = cat.compose(restrict, s.solver) == id;

  RepresentedFunctor represented(cat, small);
  SplittingEngine engine(represented);
  const Decomposition d = engine.decompose(n - 1, id.coefficients);
  std::vector<ZVector> coords = d.kernel_coordinates;
  coords.push_back(ZVector(engine.kernel_basis(n).cols(), 0));
  s.from_splitting.coefficients = engine.assemble(n, coords);
  s.splitting_verified = cat.compose(restrict, s.from_splitting) == id;
  if (!s.solver_verified || !s.splitting_verified) throw Inconsistency("computed section fails verification");
  return s;
}

ProductSectionReport product_section(const BurnsideCategory& cat, const GroupPtr& g, const Morphism& sigma, int n) {
  GroupPtr big = symmetric_group(n);
  GroupPtr small = symmetric_group(n - 1);
  if (!sigma.source()->same_group(*small) || !sigma.target()->same_group(*big)) {
    throw InvalidInput("not a candidate section of i_n");
  }
  GroupPtr g_big = direct_product(*g, *big);
  GroupPtr g_small = direct_product(*g, *small);
  const GroupHom id_g = GroupHom::identity(g);

  ProductSectionReport report;
  report.group = g;
  report.n = n;
  report.product = cat.zero(g_small, g_big);
  for (std::size_t i = 0; i < sigma.coefficients.size(); ++i) {
    if (sigma.coefficients[i] == 0) continue;
    const auto& p = sigma.basis->pairs()[i];
    GroupPtr gh = direct_product(*g, *p.subgroup);
    const GroupHom lifted = product_hom(gh, g_small, id_g, p.hom);
    const std::size_t index = report.product.basis->canonical_index(lifted);
    report.product.coefficients[index] = checked_add(report.product.coefficients[index], sigma.coefficients[i]);
  }

  const GroupHom g_i = product_hom(g_small, g_big, id_g, standard_embedding(n));
  const ZMatrix res = cat.burnside().res(g_i).matrix;
  report.action_identity = res * cat.action_on_burnside(report.product) == ZMatrix::identity(res.rows());
  report.category_identity = cat.compose(cat.restriction(g_i), report.product) == cat.identity(g_small);
  return report;
}

}  // namespace finglobal
