#pragma once

#include <cstdint>
#include <optional>

#include "subinv/ring/ring.hpp"

namespace subinv {

/// Where the power sequence x, x^2, ... of a finite-ring element first
/// repeats: x^start == x^(start + period).
struct PowerCycle {
  std::uint64_t start = 0;
  std::uint64_t period = 0;
};

/// Walks the power sequence of `x` until it repeats.
PowerCycle power_cycle(const RingHandle& ring, const Element& x);

/// Inverse of `x` as a power of itself: a unit has a purely periodic power
/// sequence, so x^p = 1 and x^-1 = x^(p-1). Returns nullopt when no power
/// of x equals 1. Requires a finite ring (throws MismatchError otherwise).
std::optional<Element> finite_unit_inverse_by_powers(const RingHandle& ring, const Element& x);

}  // namespace subinv
