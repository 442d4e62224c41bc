#pragma once

#include <cstddef>

#include "subinv/errors.hpp"
#include "subinv/matrix/matrix.hpp"
#include "subinv/matrix/permutation.hpp"

namespace subinv {

namespace detail {

template <RingLike R>
typename R::value_type signed_add(const R& ring, typename R::value_type acc,
                                  const typename R::value_type& term, int sign) {
  return ring.add(acc, sign > 0 ? term : ring.neg(term));
}

}  // namespace detail

/// Leibniz expansion sum_sigma sgn(sigma) a_{sigma(1),1} ... a_{sigma(n),n}.
/// The empty matrix has determinant 1.
template <RingLike R>
typename R::value_type det_leibniz(const Matrix<R>& a) {
  const R& ring = a.ring();
  if (!ring.is_commutative()) {
    throw NotCommutativeError("det_leibniz needs a commutative ring");
  }
  auto acc = ring.zero();
  for (const Permutation& sigma : permutations_with_sign(a.size())) {
    auto term = ring.one();
    for (std::size_t t = 0; t < a.size(); ++t) term = ring.mul(term, a(sigma(t), t));
    acc = detail::signed_add(ring, std::move(acc), term, sigma.sign());
  }
  return acc;
}

/// Transposed cofactor matrix: adj(A)_{ij} = (-1)^{i+j} det(A without row j, column i).
template <RingLike R>
Matrix<R> adjugate(const Matrix<R>& a) {
  const R& ring = a.ring();
  const std::size_t n = a.size();
  if (n == 0) throw MismatchError("adjugate of the empty matrix is undefined");
  if (!ring.is_commutative()) throw NotCommutativeError("adjugate needs a commutative ring");
  Matrix<R> out(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto cofactor = det_leibniz(a.minor(j, i));
      out(i, j) = ((i + j) % 2 == 0) ? cofactor : ring.neg(cofactor);
    }
  }
  return out;
}

/// Ordered column expansion sum_tau sgn(tau) b_{tau(1),1} b_{tau(2),2} ... b_{tau(n),n},
/// every product taken strictly left to right. A right inverse of det(A)
/// whenever A B = I with the entries of A commuting.
template <RingLike R>
typename R::value_type ocdet_fwd(const Matrix<R>& b) {
  const R& ring = b.ring();
  auto acc = ring.zero();
  for (const Permutation& tau : permutations_with_sign(b.size())) {
    auto term = ring.one();
    for (std::size_t t = 0; t < b.size(); ++t) term = ring.mul(term, b(tau(t), t));
    acc = detail::signed_add(ring, std::move(acc), term, tau.sign());
  }
  return acc;
}

/// Mirror of ocdet_fwd through the opposite ring:
/// sum_tau sgn(tau) b_{n,tau(n)} b_{n-1,tau(n-1)} ... b_{1,tau(1)}.
/// A left inverse of det(A) whenever B A = I with the entries of A commuting.
template <RingLike R>
typename R::value_type ocdet_left(const Matrix<R>& b) {
  const R& ring = b.ring();
  const std::size_t n = b.size();
  auto acc = ring.zero();
  for (const Permutation& tau : permutations_with_sign(n)) {
    auto term = ring.one();
    for (std::size_t t = n; t-- > 0;) term = ring.mul(term, b(t, tau(t)));
    acc = detail::signed_add(ring, std::move(acc), term, tau.sign());
  }
  return acc;
}

/// First-column expansion sum_k (-1)^{k+1} b_{k,1} * ocdet_recursive(minor(k, 1)),
/// keeping the left-to-right factor order. Equal to ocdet_fwd.
template <RingLike R>
typename R::value_type ocdet_recursive(const Matrix<R>& b) {
  const R& ring = b.ring();
  const std::size_t n = b.size();
  if (n == 0) return ring.one();
  if (n == 1) return b(0, 0);
  auto acc = ring.zero();
  for (std::size_t k = 0; k < n; ++k) {
    auto term = ring.mul(b(k, 0), ocdet_recursive(b.minor(k, 0)));
    acc = detail::signed_add(ring, std::move(acc), term, k % 2 == 0 ? 1 : -1);
  }
  return acc;
}

}  // namespace subinv
