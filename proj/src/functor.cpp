#include "finglobal/functor.hpp"

#include "finglobal/errors.hpp"

namespace finglobal {

ZMap ZMap::identity(const FreeAbelian& a) { return ZMap{a, a, ZMatrix::identity(a.rank())}; }

ZMap ZMap::zero(const FreeAbelian& source, const FreeAbelian& target) {
  return ZMap{source, target, ZMatrix(target.rank(), source.rank())};
}

bool ZMap::is_identity() const { return matrix == ZMatrix::identity(source.rank()) && source == target; }

ZMap compose(const ZMap& outer, const ZMap& inner) {
  if (outer.source.rank() != inner.target.rank()) throw InvalidInput("composing maps of mismatched rank");
  return ZMap{inner.source, outer.target, outer.matrix * inner.matrix};
}

ZMap operator+(const ZMap& a, const ZMap& b) {
  if (a.source.rank() != b.source.rank() || a.target.rank() != b.target.rank()) {
    throw InvalidInput("adding maps of mismatched rank");
  }
  return ZMap{a.source, a.target, a.matrix + b.matrix};
}

ZMap operator-(const ZMap& a, const ZMap& b) {
  if (a.source.rank() != b.source.rank() || a.target.rank() != b.target.rank()) {
    throw InvalidInput("subtracting maps of mismatched rank");
  }
  return ZMap{a.source, a.target, a.matrix - b.matrix};
}

ZMap transfer_along(const GlobalFunctor& f, const GroupHom& mono) {
  if (!mono.is_injective()) throw InvalidInput("transfer along a non-injective homomorphism");
  GroupPtr image = mono.image();
  const GroupPtr& source = mono.source();
  std::vector<std::uint32_t> inverse(image->order());
  for (std::uint32_t i = 0; i < source->order(); ++i) {
    inverse[image->index_of(mono.target()->element(mono(i)))] = i;
  }
  GroupHom back(image, source, std::move(inverse));
  return compose(f.tr(image, mono.target()), f.res(back));
}

}  // namespace finglobal
