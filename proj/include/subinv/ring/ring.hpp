#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "subinv/ring/element.hpp"
#include "subinv/ring/ring_like.hpp"

namespace subinv {

/// Exact ring with unity, chosen at runtime from a ring spec.
///
/// Implementations are immutable once built and every operation is a pure
/// function of its arguments.
class Ring {
 public:
  virtual ~Ring() = default;

  /// Canonical ring spec, e.g. "mat:2:zmod:3".
  virtual std::string descriptor() const = 0;
  virtual bool is_commutative() const = 0;
  virtual bool is_finite() const = 0;

  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual Element neg(const Element& a) const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual bool equal(const Element& a, const Element& b) const = 0;

  /// Two-sided inverse, or nullopt when `a` is not a unit.
  virtual std::optional<Element> try_invert(const Element& a) const = 0;

  /// The image of an integer under the unique ring map from Z.
  virtual Element from_integer(const mpz_class& value) const = 0;

  /// Whether `a` is a well-formed, canonically reduced value of this ring.
  virtual bool is_valid(const Element& a) const = 0;

  /// All elements in a fixed deterministic order. Finite rings only.
  virtual std::vector<Element> elements() const;

  /// Number of elements; nullopt for infinite rings or counts beyond 64 bits.
  virtual std::optional<std::uint64_t> cardinality() const { return std::nullopt; }

  /// Uniformly random element for finite rings; small-range sample otherwise.
  virtual Element random(std::mt19937_64& rng) const = 0;

  virtual nlohmann::json to_json(const Element& a) const = 0;
  virtual Element from_json(const nlohmann::json& j) const = 0;
  virtual std::string render(const Element& a) const = 0;
};

/// Shared, cheap-to-copy reference to a runtime ring.
class RingHandle {
 public:
  using value_type = Element;

  RingHandle() = default;
  explicit RingHandle(std::shared_ptr<const Ring> impl) : impl_(std::move(impl)) {}

  const Ring& operator*() const { return *impl_; }
  const Ring* operator->() const { return impl_.get(); }
  explicit operator bool() const noexcept { return static_cast<bool>(impl_); }

  template <class T>
  const T* as() const {
    return dynamic_cast<const T*>(impl_.get());
  }

  std::string descriptor() const { return impl_->descriptor(); }
  bool is_commutative() const { return impl_->is_commutative(); }
  bool is_finite() const { return impl_->is_finite(); }

  Element zero() const { return impl_->zero(); }
  Element one() const { return impl_->one(); }
  Element add(const Element& a, const Element& b) const { return impl_->add(a, b); }
  Element neg(const Element& a) const { return impl_->neg(a); }
  Element mul(const Element& a, const Element& b) const { return impl_->mul(a, b); }
  bool equal(const Element& a, const Element& b) const { return impl_->equal(a, b); }
  std::optional<Element> try_invert(const Element& a) const { return impl_->try_invert(a); }

  friend bool operator==(const RingHandle& lhs, const RingHandle& rhs) {
    return lhs.impl_ == rhs.impl_ || (lhs.impl_ && rhs.impl_ && lhs.descriptor() == rhs.descriptor());
  }

 private:
  std::shared_ptr<const Ring> impl_;
};

static_assert(RingLike<RingHandle>);

/// Parses "int" | "zmod:<m>" | "mat:<k>:<spec>" | "dualnum:<spec>" | "frac:<spec>".
/// Throws ParseError on malformed input.
RingHandle parse_ring_spec(std::string_view spec);

/// x^e by repeated squaring, e >= 0.
Element power(const RingHandle& ring, const Element& x, std::uint64_t exponent);

}  // namespace subinv
