#include "subinv/matrix/inversion.hpp"

#include "subinv/errors.hpp"
#include "subinv/ring/rings.hpp"

namespace subinv {

std::optional<RingMatrix> invert_commutative(const RingMatrix& a) {
  const RingHandle& ring = a.ring();
  if (!ring.is_commutative()) throw NotCommutativeError("invert_commutative needs a commutative ring");
  if (a.size() == 0) return a;
  auto det_inverse = ring.try_invert(det_leibniz(a));
  if (!det_inverse) return std::nullopt;
  return scale_right(adjugate(a), *det_inverse);
}

FractionMatrix invert_via_adjugate(const RingMatrix& a, std::shared_ptr<const DenominatorSet> denominators) {
  Localization loc(a.ring(), std::move(denominators));
  const std::size_t n = a.size();
  if (n == 0) return FractionMatrix(loc, 0);
  Element det = det_leibniz(a);
  if (!loc.denominators().contains(det)) {
    throw NotInvertibleError("not invertible over this localization: det = " + a.ring()->render(det) +
                             " is not in " + loc.denominators().descriptor());
  }
  RingMatrix adj = adjugate(a);
  FractionMatrix out(loc, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = loc.make(adj(i, j), det);
  return out;
}

FractionMatrix to_fractions(const RingMatrix& a, const Localization& loc) {
  FractionMatrix out(loc, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = loc.embed(a(i, j));
  return out;
}

RingMatrix flatten(const RingMatrix& m) {
  const auto* mat = m.ring().as<MatrixRing>();
  if (!mat) throw MismatchError("flatten needs entries from a matrix ring, got " + m.ring().descriptor());
  const std::size_t n = m.size();
  const std::size_t k = mat->block_size();
  RingMatrix out(mat->base(), n * k);
  for (std::size_t bi = 0; bi < n; ++bi) {
    for (std::size_t bj = 0; bj < n; ++bj) {
      const Element& block = m(bi, bj);
      if (block.is_scalar() || block.parts().size() != k * k) {
        throw MismatchError("inconsistent block size in flatten");
      }
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(bi * k + i, bj * k + j) = block.parts()[i * k + j];
    }
  }
  return out;
}

RingMatrix unflatten(const RingMatrix& m, const RingHandle& block_ring) {
  const auto* mat = block_ring.as<MatrixRing>();
  if (!mat) throw MismatchError("unflatten needs a matrix ring, got " + block_ring.descriptor());
  const std::size_t k = mat->block_size();
  if (m.size() % k != 0) throw MismatchError("dimension is not a multiple of the block size");
  if (!(m.ring() == mat->base())) throw MismatchError("unflatten: base rings differ");
  const std::size_t n = m.size() / k;
  RingMatrix out(block_ring, n);
  for (std::size_t bi = 0; bi < n; ++bi) {
    for (std::size_t bj = 0; bj < n; ++bj) {
      Element::Parts parts;
      parts.reserve(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) parts.push_back(m(bi * k + i, bj * k + j));
      out(bi, bj) = Element(std::move(parts));
    }
  }
  return out;
}

RingMatrix embed_matrix(const RingMatrix& m, const Embedding& embedding) {
  RingMatrix out(embedding.to(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = embedding(m(i, j));
  return out;
}

}  // namespace subinv
