#include "finglobal/split.hpp"

#include <set>

#include "finglobal/errors.hpp"

namespace finglobal {

namespace {

ZMatrix hstack_all(const std::vector<ZMap>& maps, std::size_t rows) {
  ZMatrix out(rows, 0);
  for (const auto& m : maps) out = out.hstack(m.matrix);
  return out;
}

std::optional<std::size_t> first_difference(const ZMatrix& a, const ZMatrix& b) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return c;
  return std::nullopt;
}

}  // namespace

ZMap SplittingEngine::restriction(int n) const {
  if (n < 1) throw InvalidInput("restriction along i_n needs n >= 1");
  std::lock_guard lock(mutex_);
  auto it = restrictions_.find(n);
  if (it != restrictions_.end()) return it->second;
  return restrictions_.emplace(n, f_.res(standard_embedding(n))).first->second;
}

ZMatrix SplittingEngine::kernel_basis(int k) const {
  if (k < 0) throw InvalidInput("negative kernel index");
  std::lock_guard lock(mutex_);
  auto it = kernels_.find(k);
  if (it != kernels_.end()) return it->second;
  ZMatrix basis = k == 0 ? ZMatrix::identity(f_.value(symmetric_group(0)).rank()) : integer_kernel(restriction(k).matrix);
  return kernels_.emplace(k, std::move(basis)).first->second;
}

FreeAbelian SplittingEngine::kernel_value(int k) const {
  FreeAbelian v;
  const ZMatrix basis = kernel_basis(k);
  for (std::size_t i = 0; i < basis.cols(); ++i) v.labels.push_back("s" + std::to_string(k) + "." + std::to_string(i));
  return v;
}

ZMap SplittingEngine::psi(int k, int n) const {
  if (k < 0 || k > n) throw InvalidInput("psi needs 0 <= k <= n");
  std::lock_guard lock(mutex_);
  auto it = psis_.find({k, n});
  if (it != psis_.end()) return it->second;
  GroupPtr g = symmetric_group(n);
  GroupPtr y = young_subgroup(k, n - k);
  const ZMap pull = f_.res(block_projection(y, 0, k));
  const ZMap push = f_.tr(y, g);
  const ZMap incl{kernel_value(k), f_.value(symmetric_group(k)), kernel_basis(k)};
  return psis_.emplace(std::pair(k, n), compose(push, compose(pull, incl))).first->second;
}

DcfReport SplittingEngine::verify_dcf(int k, int n) const {
  if (k < 1 || k > n - 1) throw InvalidInput("the double coset formula needs 1 <= k <= n - 1");
  GroupPtr g = symmetric_group(n);
  GroupPtr g1 = symmetric_group(n - 1);
  GroupPtr y = young_subgroup(k, n - k);
  const Perm tau = Perm::from_cycles("(" + std::to_string(k) + " " + std::to_string(n) + ")", n);

  // first summand: Σ_{k,n-k-1} inside Σ_{n-1}
  GroupPtr y1 = young_subgroup(k, n - k - 1);
  if (y1->degree() != n - 1) y1 = extend_degree(*y1, n - 1);
  GroupHom y1_in_y = GroupHom::embedding(y1, y);
  if (!y1->is_subgroup_of(*g1)) throw Inconsistency("first double coset subgroup is not in the point stabilizer");
  const ZMap first = compose(f_.tr(y1, g1), f_.res(y1_in_y));

  // second summand: Σ_{k-1,n-k} inside Σ_{n-1}, moved into Σ_{k,n-k} by (k n)
  GroupPtr y2 = young_subgroup(k - 1, n - k);
  if (y2->degree() != n - 1) y2 = extend_degree(*y2, n - 1);
  GroupPtr moved = conjugate_subgroup(*extend_degree(*y2, n), tau);
  if (!moved->is_subgroup_of(*y)) throw Inconsistency("conjugated double coset subgroup is not in the Young subgroup");
  GroupHom c = GroupHom::from_function(y2, moved, [&](const Perm& x) { return tau.conjugate(x.extended(n)); });
  const ZMap second = compose(f_.tr(y2, g1), compose(f_.res(c), f_.res(GroupHom::inclusion(moved, y))));

  DcfReport r;
  r.functor = f_.name();
  r.n = n;
  r.k = k;
  r.lhs = compose(restriction(n), f_.tr(y, g)).matrix;
  r.rhs = (first + second).matrix;
  r.first_differing_column = first_difference(r.lhs, r.rhs);
  r.equal = !r.first_differing_column && r.lhs.rows() == r.rhs.rows();
  return r;
}

SplittingReport SplittingEngine::report(int n) const {
  if (n < 0) throw InvalidInput("negative n");
  SplittingReport r;
  r.functor = f_.name();
  r.n = n;
  const std::size_t rank = f_.value(symmetric_group(n)).rank();
  for (int k = 0; k <= n; ++k) {
    r.kernel_bases.push_back(kernel_basis(k));
    r.psi.push_back(psi(k, n));
    r.component_ranks.push_back(r.kernel_bases.back().cols());
  }
  r.assembled = hstack_all(r.psi, rank);
  if (r.assembled.cols() != rank) {
    throw Inconsistency("component ranks sum to " + std::to_string(r.assembled.cols()) + ", expected " +
                        std::to_string(rank));
  }
  r.determinant = determinant(r.assembled);
  if (abs(r.determinant) != 1) throw Inconsistency("splitting map has determinant " + r.determinant.str());

  if (n >= 1) {
    const ZMap res = restriction(n);
    for (int k = 0; k < n; ++k) r.ladder.push_back(res.matrix * psi(k, n).matrix == psi(k, n - 1).matrix);
    r.restriction_split_surjective = true;
    for (std::size_t j = 0; j < res.matrix.rows(); ++j) {
      ZVector e(res.matrix.rows(), 0);
      e[j] = 1;
      if (!solve_exact(res.matrix, e)) r.restriction_split_surjective = false;
    }
    for (int k = 0; k < n; ++k)
      if (!r.ladder[static_cast<std::size_t>(k)]) {
        throw Inconsistency("ladder relation fails for k = " + std::to_string(k) + ", n = " + std::to_string(n));
      }
    if (!r.restriction_split_surjective) throw Inconsistency("restriction is not surjective at n = " + std::to_string(n));
  } else {
    r.restriction_split_surjective = true;
  }
  return r;
}

Decomposition SplittingEngine::decompose(int n, const ZVector& x) const {
  if (n < 0) throw InvalidInput("negative n");
  const std::size_t rank = f_.value(symmetric_group(n)).rank();
  if (x.size() != rank) throw InvalidInput("vector length does not match the rank of F(Σ_n)");
  Decomposition d;
  d.n = n;
  if (n == 0) {
    d.kernel_coordinates.push_back(x);
    d.components.push_back(x);
    return d;
  }
  d = decompose(n - 1, restriction(n).matrix.apply(x));
  d.n = n;
  ZVector rest = x;
  for (int k = 0; k < n; ++k) {
    const ZVector part = psi(k, n).matrix.apply(d.kernel_coordinates[static_cast<std::size_t>(k)]);
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = checked_add(rest[i], -part[i]);
  }
  auto top = solve_exact(kernel_basis(n), rest);
  if (!top) throw Inconsistency("top component is not in the kernel lattice at n = " + std::to_string(n));
  d.kernel_coordinates.push_back(*top);
  d.components.push_back(rest);
  return d;
}

ZVector SplittingEngine::assemble(int n, const std::vector<ZVector>& kernel_coordinates) const {
  if (kernel_coordinates.size() != static_cast<std::size_t>(n + 1)) throw InvalidInput("need one component per k");
  ZVector total(f_.value(symmetric_group(n)).rank(), 0);
  for (int k = 0; k <= n; ++k) {
    const ZVector part = psi(k, n).matrix.apply(kernel_coordinates[static_cast<std::size_t>(k)]);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] = checked_add(total[i], part[i]);
  }
  return total;
}

std::string AlternatingWitness::conclusion() const {
  const std::string m = std::to_string(n - 1);
  if (!found()) return "no fusion witness at this n";
  return "restriction RU(A_" + std::to_string(n) + ") -> RU(A_" + m +
         ") lands in the class functions constant on fused classes, a sublattice of rank " +
         std::to_string(image_rank) + " < " + std::to_string(sub_classes) + "; restriction is not surjective";
}

AlternatingWitness non_splitting_witness_alternating(int n) {
  if (n < 5 || n > 8) throw InvalidInput("the alternating witness is defined for 5 <= n <= 8");
  AlternatingWitness w;
  w.n = n;
  GroupPtr sub = alternating_group(n - 1);
  GroupPtr group = alternating_group(n);
  w.fused = fused_pairs(sub, group);
  auto sub_classes = conjugacy_classes(extend_degree(*sub, n));
  auto classes = conjugacy_classes(group);
  std::set<std::size_t> hit;
  for (const Perm& rep : sub_classes->representatives) hit.insert(classes->class_index(rep));
  w.sub_classes = sub_classes->size();
  w.image_rank = hit.size();
  for (auto& [a, b] : w.fused) {
    a = a.restricted(0, n - 1);
    b = b.restricted(0, n - 1);
  }
  return w;
}

std::vector<GroupHom> alternating_retractions(int n) {
  if (n < 2 || n > 5) throw InvalidInput("retraction search is limited to 2 <= n <= 5");
  GroupPtr big = alternating_group(n);
  GroupPtr small = alternating_group(n - 1);
  GroupHom i = GroupHom::embedding(small, big);
  std::vector<GroupHom> found;
  const std::size_t gens = big->generators().size();
  std::vector<std::uint32_t> images(gens, 0);
  for (;;) {
    if (auto r = GroupHom::from_generator_images(big, small, images)) {
      if (i.then(*r).map() == GroupHom::identity(small).map()) found.push_back(*r);
    }
    std::size_t pos = 0;
    while (pos < gens && ++images[pos] == small->order()) images[pos++] = 0;
    if (pos == gens) break;
  }
  return found;
}

}  // namespace finglobal
