#pragma once

#include <functional>
#include <optional>

#include "subinv/ring/ring.hpp"

namespace subinv {

/// A ring map R -> S between two runtime rings, with partial inverse.
///
/// Supported pairs: identical rings; int into anything (n -> n*1);
/// dualnum:X into mat:2:X (x + y*eps -> x*I + y*E); and any R into
/// mat:k:R as scalar matrices. Compositions through nested matrix rings are
/// resolved recursively.
class Embedding {
 public:
  Embedding(RingHandle from, RingHandle to);

  const RingHandle& from() const noexcept { return from_; }
  const RingHandle& to() const noexcept { return to_; }

  Element operator()(const Element& r) const { return apply_(r); }

  /// The r with embed(r) == s, when s lies in the image.
  std::optional<Element> preimage(const Element& s) const { return preimage_(s); }

 private:
  RingHandle from_;
  RingHandle to_;
  std::function<Element(const Element&)> apply_;
  std::function<std::optional<Element>(const Element&)> preimage_;
};

}  // namespace subinv
