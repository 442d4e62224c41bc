#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "subinv/ring/ring.hpp"

namespace subinv {

using ElementIndex = std::uint32_t;

/// Sorted, duplicate-free set of element indices into a FiniteRingTable.
using ElementSet = std::vector<ElementIndex>;

/// Each element of S written as a k x k block over Z/m, so that matrices over
/// S can be inverted by flattening. Blocks are row-major residues.
struct LinearRepresentation {
  std::int64_t modulus = 0;
  std::size_t k = 0;
  std::vector<std::vector<std::int64_t>> blocks;  // indexed by element
  std::map<std::vector<std::int64_t>, ElementIndex> index_of_block;

  /// The element with this block, if S contains one.
  std::optional<ElementIndex> element_of(const std::vector<std::int64_t>& block) const;
};

/// Operation tables of a finite ring, indexed in the ring's enumeration order.
class FiniteRingTable {
 public:
  static constexpr std::size_t kMaxElements = 256;

  /// Enumerates `ring`, fills the tables and validates the ring axioms and the
  /// unit table against try_invert. Throws BudgetExceededError when the ring
  /// has more than kMaxElements elements, MismatchError when it is infinite,
  /// VerificationFailure when an axiom fails.
  explicit FiniteRingTable(RingHandle ring);

  const RingHandle& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const Element& element(ElementIndex i) const { return elements_[i]; }

  /// Throws MismatchError when `e` is not an element of the ring.
  ElementIndex index_of(const Element& e) const;

  ElementIndex zero() const noexcept { return zero_; }
  ElementIndex one() const noexcept { return one_; }
  ElementIndex add(ElementIndex a, ElementIndex b) const { return add_[a * size() + b]; }
  ElementIndex mul(ElementIndex a, ElementIndex b) const { return mul_[a * size() + b]; }
  ElementIndex neg(ElementIndex a) const { return neg_[a]; }
  std::optional<ElementIndex> inverse(ElementIndex a) const { return inverse_[a]; }
  bool is_unit(ElementIndex a) const { return inverse_[a].has_value(); }

  /// Present for zmod:m, mat:k:zmod:m and dualnum:zmod:m.
  const std::optional<LinearRepresentation>& linear() const noexcept { return linear_; }

 private:
  void validate() const;

  RingHandle ring_;
  std::vector<Element> elements_;
  std::map<Element, ElementIndex> index_;
  ElementIndex zero_ = 0;
  ElementIndex one_ = 0;
  std::vector<ElementIndex> add_;
  std::vector<ElementIndex> mul_;
  std::vector<ElementIndex> neg_;
  std::vector<std::optional<ElementIndex>> inverse_;
  std::optional<LinearRepresentation> linear_;
};

}  // namespace subinv
