#pragma once

#include <concepts>

namespace subinv {

/// A ring context: owns whatever is needed to combine its values.
///
/// Values do not carry their ring, so every operation goes through the
/// context. Both the runtime rings (`RingHandle`) and the symbolic algebra
/// (`FreeAlgebra`) model this, which lets the matrix code be written once.
template <class R>
concept RingLike = std::copy_constructible<R> &&
    requires(const R& ring, const typename R::value_type& a, const typename R::value_type& b) {
      typename R::value_type;
      { ring.zero() } -> std::convertible_to<typename R::value_type>;
      { ring.one() } -> std::convertible_to<typename R::value_type>;
      { ring.add(a, b) } -> std::convertible_to<typename R::value_type>;
      { ring.neg(a) } -> std::convertible_to<typename R::value_type>;
      { ring.mul(a, b) } -> std::convertible_to<typename R::value_type>;
      { ring.equal(a, b) } -> std::convertible_to<bool>;
      { ring.is_commutative() } -> std::convertible_to<bool>;
    };

template <RingLike R>
typename R::value_type sub(const R& ring, const typename R::value_type& a,
                           const typename R::value_type& b) {
  return ring.add(a, ring.neg(b));
}

}  // namespace subinv
