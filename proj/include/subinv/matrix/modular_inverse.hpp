#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "subinv/matrix/inversion.hpp"

namespace subinv {

namespace detail {

inline std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

inline mpz_class floor_mod(const mpz_class& v, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

// g = s*a + t*b with g = gcd(a, b) >= 0, for a, b >= 0.
template <class T>
void extended_gcd(const T& a, const T& b, T& g, T& s, T& t) {
  T old_r = a, r = b;
  T old_s = 1, cur_s = 0;
  T old_t = 0, cur_t = 1;
  while (r != 0) {
    T q = old_r / r;
    T tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

}  // namespace detail

/// Inverse of a dim x dim matrix over Z/m (row-major residues in [0, m)),
/// or nullopt when it is singular.
///
/// Works for composite m: columns are cleared with unimodular 2x2 row
/// operations built from extended gcds, so the determinant is preserved and
/// the matrix is invertible iff every resulting pivot is a unit. For the
/// 64-bit instantiation m must stay below 2^31.
template <class T>
std::optional<std::vector<T>> invert_mod(const std::vector<T>& matrix, std::size_t dim, const T& modulus) {
  using detail::floor_mod;
  const std::size_t width = 2 * dim;
  std::vector<T> aug(dim * width, T(0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i * width + j] = floor_mod(matrix[i * dim + j], modulus);
    aug[i * width + dim + i] = floor_mod(T(1), modulus);
  }

  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = c + 1; r < dim; ++r) {
      const T a = aug[c * width + c];
      const T b = aug[r * width + c];
      if (b == 0) continue;
      T g, s, t;
      detail::extended_gcd(a, b, g, s, t);
      const T a_red = a / g;
      const T b_red = b / g;
      for (std::size_t j = c; j < width; ++j) {
        const T x = aug[c * width + j];
        const T y = aug[r * width + j];
        aug[c * width + j] = floor_mod(T(s * x + t * y), modulus);
        aug[r * width + j] = floor_mod(T(a_red * y - b_red * x), modulus);
      }
    }
    T g, s, t;
    detail::extended_gcd(aug[c * width + c], modulus, g, s, t);
    if (g != 1) return std::nullopt;
    const T pivot_inverse = floor_mod(s, modulus);
    for (std::size_t j = c; j < width; ++j) {
      aug[c * width + j] = floor_mod(T(aug[c * width + j] * pivot_inverse), modulus);
    }
  }

  for (std::size_t c = dim; c-- > 0;) {
    for (std::size_t r = 0; r < c; ++r) {
      const T factor = aug[r * width + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < width; ++j) {
        aug[r * width + j] = floor_mod(T(aug[r * width + j] - factor * aug[c * width + j]), modulus);
      }
    }
  }

  std::vector<T> out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[i * dim + j] = aug[i * width + dim + j];
  return out;
}

/// invert_mod applied to a matrix over zmod:m. Throws MismatchError for any
/// other entry ring.
std::optional<RingMatrix> invert_over_zmod(const RingMatrix& a);

}  // namespace subinv
