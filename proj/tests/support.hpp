#pragma once

#include <random>
#include <string>
#include <vector>

#include "subinv/matrix/inversion.hpp"
#include "subinv/ring/ring.hpp"

namespace test_support {

using namespace subinv;

inline Element z(long v) { return Element(v); }

inline RingMatrix matrix_of(const RingHandle& ring, std::size_t n, const std::vector<long>& values) {
  std::vector<Element> entries;
  for (long v : values) entries.push_back(ring->from_integer(v));
  return RingMatrix(ring, n, std::move(entries));
}

inline RingMatrix random_matrix(const RingHandle& ring, std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> entries;
  for (std::size_t i = 0; i < n * n; ++i) entries.push_back(ring->random(rng));
  return RingMatrix(ring, n, std::move(entries));
}

// Brute-force two-sided inverse in a finite ring.
inline std::optional<Element> brute_force_inverse(const RingHandle& ring, const Element& a) {
  const Element one = ring.one();
  for (const Element& x : ring->elements()) {
    if (ring.equal(ring.mul(a, x), one) && ring.equal(ring.mul(x, a), one)) return x;
  }
  return std::nullopt;
}

}  // namespace test_support
