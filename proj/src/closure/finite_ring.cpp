#include "subinv/closure/finite_ring.hpp"

#include <functional>

#include "subinv/errors.hpp"
#include "subinv/ring/rings.hpp"

namespace subinv {

std::optional<ElementIndex> LinearRepresentation::element_of(const std::vector<std::int64_t>& block) const {
  auto it = index_of_block.find(block);
  if (it == index_of_block.end()) return std::nullopt;
  return it->second;
}

namespace {

std::optional<std::int64_t> small_modulus(const RingHandle& ring) {
  const auto* zmod = ring.as<ModularRing>();
  if (!zmod || !zmod->modulus().fits_slong_p() || zmod->modulus() >= (1L << 31)) return std::nullopt;
  return zmod->modulus().get_si();
}

std::optional<LinearRepresentation> linear_representation(const RingHandle& ring, const std::vector<Element>& elements) {
  LinearRepresentation rep;
  std::function<std::vector<std::int64_t>(const Element&)> block_of;
  if (auto m = small_modulus(ring)) {
    rep.modulus = *m;
    rep.k = 1;
    block_of = [](const Element& e) { return std::vector<std::int64_t>{e.scalar().get_si()}; };
  } else if (const auto* mat = ring.as<MatrixRing>()) {
    auto m = small_modulus(mat->base());
    if (!m) return std::nullopt;
    rep.modulus = *m;
    rep.k = mat->block_size();
    block_of = [](const Element& e) {
      std::vector<std::int64_t> out;
      for (const Element& x : e.parts()) out.push_back(x.scalar().get_si());
      return out;
    };
  } else if (const auto* dual = ring.as<DualNumberRing>()) {
    auto m = small_modulus(dual->base());
    if (!m) return std::nullopt;
    rep.modulus = *m;
    rep.k = 2;
    block_of = [](const Element& e) {
      const std::int64_t x = e.parts()[0].scalar().get_si();
      const std::int64_t y = e.parts()[1].scalar().get_si();
      return std::vector<std::int64_t>{x, y, 0, x};
    };
  } else {
    return std::nullopt;
  }
  for (ElementIndex i = 0; i < elements.size(); ++i) {
    rep.blocks.push_back(block_of(elements[i]));
    rep.index_of_block.emplace(rep.blocks.back(), i);
  }
  return rep;
}

}  // namespace

FiniteRingTable::FiniteRingTable(RingHandle ring) : ring_(std::move(ring)) {
  if (!ring_.is_finite()) throw MismatchError(ring_.descriptor() + " is not finite");
  if (auto count = ring_->cardinality(); count && *count > kMaxElements) {
    throw BudgetExceededError(ring_.descriptor() + " has " + std::to_string(*count) + " elements, more than the table limit " +
                                  std::to_string(kMaxElements),
                              *count, kMaxElements);
  }
  elements_ = ring_->elements();
  if (elements_.size() > kMaxElements) {
    throw BudgetExceededError(ring_.descriptor() + " is too large for operation tables", elements_.size(), kMaxElements);
  }
  for (ElementIndex i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);

  const std::size_t n = elements_.size();
  zero_ = index_of(ring_.zero());
  one_ = index_of(ring_.one());
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inverse_.resize(n);
  for (ElementIndex a = 0; a < n; ++a) {
    neg_[a] = index_of(ring_.neg(elements_[a]));
    for (ElementIndex b = 0; b < n; ++b) {
      add_[a * n + b] = index_of(ring_.add(elements_[a], elements_[b]));
      mul_[a * n + b] = index_of(ring_.mul(elements_[a], elements_[b]));
    }
  }
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      if (mul(a, b) == one_ && mul(b, a) == one_) {
        inverse_[a] = b;
        break;
      }
    }
  }
  validate();
  linear_ = linear_representation(ring_, elements_);
}

ElementIndex FiniteRingTable::index_of(const Element& e) const {
  if (auto it = index_.find(e); it != index_.end()) return it->second;
  for (ElementIndex i = 0; i < elements_.size(); ++i) {
    if (ring_.equal(elements_[i], e)) return i;
  }
  throw MismatchError(e.debug_string() + " is not an element of " + ring_.descriptor());
}

void FiniteRingTable::validate() const {
  const std::size_t n = size();
  auto fail = [&](const std::string& what) { throw VerificationFailure(ring_.descriptor() + ": " + what); };
  for (ElementIndex a = 0; a < n; ++a) {
    if (add(a, zero_) != a || mul(a, one_) != a || mul(one_, a) != a) fail("identity law fails");
    if (add(a, neg_[a]) != zero_) fail("additive inverse fails");
    for (ElementIndex b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) fail("addition is not commutative");
      for (ElementIndex c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("addition is not associative");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplication is not associative");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("left distributivity fails");
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) fail("right distributivity fails");
      }
    }
    const auto by_ring = ring_.try_invert(elements_[a]);
    if (by_ring.has_value() != inverse_[a].has_value()) fail("unit table disagrees with try_invert");
    if (by_ring && index_of(*by_ring) != *inverse_[a]) fail("inverse table disagrees with try_invert");
  }
}

}  // namespace subinv
