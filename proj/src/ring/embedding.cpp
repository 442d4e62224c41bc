#include "subinv/ring/embedding.hpp"

#include "subinv/errors.hpp"
#include "subinv/ring/rings.hpp"

namespace subinv {

namespace {

bool is_zero(const RingHandle& ring, const Element& x) { return ring.equal(x, ring.zero()); }

// Scalar matrix diag(d, ..., d) check for an element of `mat`; returns d.
std::optional<Element> scalar_diagonal(const MatrixRing& mat, const Element& s) {
  if (!mat.is_valid(s)) return std::nullopt;
  const std::size_t k = mat.block_size();
  const RingHandle& base = mat.base();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element& e = mat.entry(s, i, j);
      if (i == j ? !base.equal(e, mat.entry(s, 0, 0)) : !is_zero(base, e)) return std::nullopt;
    }
  }
  return mat.entry(s, 0, 0);
}

std::optional<Element> integer_preimage(const RingHandle& to, const Element& s) {
  if (to.as<IntegerRing>() || to.as<ModularRing>()) {
    if (!s.is_scalar()) return std::nullopt;
    return s;
  }
  if (const auto* mat = to.as<MatrixRing>()) {
    auto d = scalar_diagonal(*mat, s);
    if (!d) return std::nullopt;
    return integer_preimage(mat->base(), *d);
  }
  if (const auto* dual = to.as<DualNumberRing>()) {
    if (!dual->is_valid(s) || !is_zero(dual->base(), s.parts()[1])) return std::nullopt;
    return integer_preimage(dual->base(), s.parts()[0]);
  }
  return std::nullopt;
}

}  // namespace

Embedding::Embedding(RingHandle from, RingHandle to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_ == to_) {
    apply_ = [](const Element& r) { return r; };
    preimage_ = [](const Element& s) { return std::optional<Element>(s); };
    return;
  }

  const auto* dual = from_.as<DualNumberRing>();
  const auto* mat = to_.as<MatrixRing>();
  if (dual && mat && mat->block_size() == 2 && dual->base() == mat->base()) {
    RingHandle base = dual->base();
    apply_ = [base](const Element& r) {
      return Element::of({r.parts()[0], r.parts()[1], base.zero(), r.parts()[0]});
    };
    RingHandle target = to_;
    preimage_ = [base, target](const Element& s) -> std::optional<Element> {
      if (!target->is_valid(s)) return std::nullopt;
      const auto& p = s.parts();
      if (!is_zero(base, p[2]) || !base.equal(p[0], p[3])) return std::nullopt;
      return Element::of({p[0], p[1]});
    };
    return;
  }

  if (from_.as<IntegerRing>()) {
    RingHandle target = to_;
    apply_ = [target](const Element& r) { return target->from_integer(r.scalar()); };
    preimage_ = [target](const Element& s) { return integer_preimage(target, s); };
    return;
  }

  if (mat) {
    Embedding inner(from_, mat->base());
    const std::size_t k = mat->block_size();
    RingHandle base = mat->base();
    apply_ = [inner, k, base](const Element& r) {
      Element::Parts parts(k * k, base.zero());
      const Element image = inner(r);
      for (std::size_t i = 0; i < k; ++i) parts[i * k + i] = image;
      return Element(std::move(parts));
    };
    RingHandle target = to_;
    preimage_ = [inner, target](const Element& s) -> std::optional<Element> {
      auto d = scalar_diagonal(*target.as<MatrixRing>(), s);
      if (!d) return std::nullopt;
      return inner.preimage(*d);
    };
    return;
  }

  throw MismatchError("no embedding of " + from_.descriptor() + " into " + to_.descriptor());
}

}  // namespace subinv
