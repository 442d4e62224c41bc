#include "subinv/ring/power_inverse.hpp"

#include <map>
#include <vector>

#include "subinv/errors.hpp"

namespace subinv {

namespace {

void require_finite(const RingHandle& ring) {
  if (!ring.is_finite()) throw MismatchError("power iteration needs a finite ring, got " + ring.descriptor());
}

// Index of a previously seen power equal to `x`, if any. Finite rings store
// canonical values, so structural lookup agrees with ring equality except
// for fractions, which fall back to a scan.
class SeenPowers {
 public:
  explicit SeenPowers(const RingHandle& ring) : ring_(ring), structural_(ring.descriptor().rfind("frac:", 0) != 0) {}

  std::optional<std::uint64_t> find(const Element& x) const {
    if (structural_) {
      auto it = index_.find(x);
      if (it == index_.end()) return std::nullopt;
      return it->second;
    }
    for (const auto& [power, exponent] : list_) {
      if (ring_.equal(power, x)) return exponent;
    }
    return std::nullopt;
  }

  void add(const Element& x, std::uint64_t exponent) {
    if (structural_) {
      index_.emplace(x, exponent);
    } else {
      list_.emplace_back(x, exponent);
    }
  }

 private:
  const RingHandle& ring_;
  bool structural_;
  std::map<Element, std::uint64_t> index_;
  std::vector<std::pair<Element, std::uint64_t>> list_;
};

}  // namespace

PowerCycle power_cycle(const RingHandle& ring, const Element& x) {
  require_finite(ring);
  SeenPowers seen(ring);
  Element current = x;
  for (std::uint64_t e = 1;; ++e) {
    if (auto first = seen.find(current)) return {*first, e - *first};
    seen.add(current, e);
    current = ring.mul(current, x);
  }
}

std::optional<Element> finite_unit_inverse_by_powers(const RingHandle& ring, const Element& x) {
  require_finite(ring);
  SeenPowers seen(ring);
  const Element one = ring.one();
  Element previous = one;  // x^(e-1)
  Element current = x;     // x^e
  for (std::uint64_t e = 1;; ++e) {
    if (ring.equal(current, one)) return previous;
    if (seen.find(current)) return std::nullopt;
    seen.add(current, e);
    previous = current;
    current = ring.mul(current, x);
  }
}

}  // namespace subinv
