#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finglobal/functor.hpp"

namespace finglobal {

struct DcfReport {
  std::string functor;
  int n = 0;
  int k = 0;
  ZMatrix lhs;
  ZMatrix rhs;
  bool equal = false;
  std::optional<std::size_t> first_differing_column;
};

struct SplittingReport {
  std::string functor;
  int n = 0;
  /// kernel_bases[k] spans F(Σ;k) as columns in F(Σ_k) coordinates.
  std::vector<ZMatrix> kernel_bases;
  std::vector<ZMap> psi;
  ZMatrix assembled;
  BigInt determinant;
  std::vector<std::size_t> component_ranks;
  /// ladder[k] for k < n: F(i_n^*) ψ_{k,n} = ψ_{k,n-1}
  std::vector<bool> ladder;
  bool restriction_split_surjective = false;
};

struct Decomposition {
  int n = 0;
  /// s_k in the coordinates of kernel_basis(k)
  std::vector<ZVector> kernel_coordinates;
  /// s_k as elements of F(Σ_k)
  std::vector<ZVector> components;
};

/// Kernels, splitting maps and decompositions for one functor. Kernel bases
/// are computed once per level and shared by every n.
class SplittingEngine {
 public:
  explicit SplittingEngine(const GlobalFunctor& f) : f_(f) {}

  const GlobalFunctor& functor() const { return f_; }
  /// F(i_n^*) : F(Σ_n) -> F(Σ_{n-1}), n >= 1.
  ZMap restriction(int n) const;
  /// Basis of F(Σ;k) as columns; the full basis of F(e) for k = 0.
  ZMatrix kernel_basis(int k) const;
  FreeAbelian kernel_value(int k) const;
  /// ψ_{k,n} : F(Σ;k) -> F(Σ_n)
  ZMap psi(int k, int n) const;

  DcfReport verify_dcf(int k, int n) const;
  /// Throws Inconsistency if a check fails.
  SplittingReport report(int n) const;
  /// Throws Inconsistency if the top component is not in the kernel.
  Decomposition decompose(int n, const ZVector& x) const;
  /// Σ_k ψ_{k,n}(s_k) for kernel coordinates s_k.
  ZVector assemble(int n, const std::vector<ZVector>& kernel_coordinates) const;

 private:
  const GlobalFunctor& f_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<int, ZMap> restrictions_;
  mutable std::map<int, ZMatrix> kernels_;
  mutable std::map<std::pair<int, int>, ZMap> psis_;
};

struct AlternatingWitness {
  int n = 0;
  /// Pairs of class representatives of A_{n-1} that fuse in A_n.
  std::vector<std::pair<Perm, Perm>> fused;
  std::size_t sub_classes = 0;
  /// Rank of the class functions on A_{n-1} constant on fused classes.
  std::size_t image_rank = 0;

  bool found() const { return !fused.empty(); }
  std::string conclusion() const;
};

/// Fusion of A_{n-1} in A_n, 5 <= n <= 8.
AlternatingWitness non_splitting_witness_alternating(int n);

/// All r : A_n -> A_{n-1} with r ∘ i = id, by exhaustive search (n <= 5).
std::vector<GroupHom> alternating_retractions(int n);

}  // namespace finglobal
