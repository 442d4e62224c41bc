#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "subinv/errors.hpp"
#include "subinv/ring/ring_like.hpp"

namespace subinv {

/// Dense square matrix over a ring context. Indices are 0-based.
template <RingLike R>
class Matrix {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  Matrix(R ring, std::size_t n) : ring_(std::move(ring)), n_(n), entries_(n * n, ring_.zero()) {}

  Matrix(R ring, std::size_t n, std::vector<value_type> entries)
      : ring_(std::move(ring)), n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) {
      throw MismatchError("matrix entry count does not match its dimension");
    }
  }

  static Matrix identity(R ring, std::size_t n) {
    Matrix m(std::move(ring), n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.ring_.one();
    return m;
  }

  const R& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return n_; }
  const std::vector<value_type>& entries() const noexcept { return entries_; }

  const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  /// The (n-1) x (n-1) matrix left after deleting `row` and `col`.
  Matrix minor(std::size_t row, std::size_t col) const {
    std::vector<value_type> out;
    out.reserve((n_ - 1) * (n_ - 1));
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (j != col) out.push_back((*this)(i, j));
      }
    }
    return Matrix(ring_, n_ - 1, std::move(out));
  }

  Matrix transpose() const {
    Matrix t(ring_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  R ring_;
  std::size_t n_;
  std::vector<value_type> entries_;
};

template <RingLike R>
void check_same_shape(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.size() != b.size()) throw MismatchError("matrix dimensions differ");
}

template <RingLike R>
Matrix<R> operator+(const Matrix<R>& a, const Matrix<R>& b) {
  check_same_shape(a, b);
  Matrix<R> out(a.ring(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a.ring().add(a(i, j), b(i, j));
  return out;
}

/// Row-by-column product; each entry sums a_ik * b_kj in increasing k.
template <RingLike R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b) {
  check_same_shape(a, b);
  const R& ring = a.ring();
  const std::size_t n = a.size();
  Matrix<R> out(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto acc = ring.zero();
      for (std::size_t k = 0; k < n; ++k) acc = ring.add(acc, ring.mul(a(i, k), b(k, j)));
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

/// c * M, multiplying every entry on the left.
template <RingLike R>
Matrix<R> scale_left(const typename R::value_type& c, const Matrix<R>& m) {
  Matrix<R> out(m.ring(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m.ring().mul(c, m(i, j));
  return out;
}

/// M * c, multiplying every entry on the right.
template <RingLike R>
Matrix<R> scale_right(const Matrix<R>& m, const typename R::value_type& c) {
  Matrix<R> out(m.ring(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m.ring().mul(m(i, j), c);
  return out;
}

/// Entrywise equality under the ring's own equality.
template <RingLike R>
bool matrices_equal(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (!a.ring().equal(a.entries()[i], b.entries()[i])) return false;
  }
  return true;
}

template <RingLike R>
bool is_identity(const Matrix<R>& m) {
  return matrices_equal(m, Matrix<R>::identity(m.ring(), m.size()));
}

}  // namespace subinv
