#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

namespace subinv {

/// Runtime value of a ring element.
///
/// Scalar rings (integers, residues) store one big integer. Composite rings
/// store their components: a k x k matrix ring keeps k*k entries in row-major
/// order, dual numbers keep (x, y), fractions keep (numerator, denominator).
/// Only the owning ring knows how to interpret the parts; equality here is
/// structural, the ring's `equal` is the mathematical one.
class Element {
 public:
  using Parts = std::vector<Element>;

  Element() : rep_(mpz_class(0)) {}
  explicit Element(mpz_class value) : rep_(std::move(value)) {}
  explicit Element(long value) : rep_(mpz_class(value)) {}
  explicit Element(Parts parts) : rep_(std::move(parts)) {}

  static Element of(std::initializer_list<Element> parts) { return Element(Parts(parts)); }

  bool is_scalar() const noexcept { return std::holds_alternative<mpz_class>(rep_); }
  const mpz_class& scalar() const { return std::get<mpz_class>(rep_); }
  const Parts& parts() const { return std::get<Parts>(rep_); }
  Parts& parts() { return std::get<Parts>(rep_); }

  friend bool operator==(const Element& lhs, const Element& rhs) {
    return compare(lhs, rhs) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const Element& lhs, const Element& rhs) {
    return compare(lhs, rhs);
  }

  /// Structural rendering, mostly for diagnostics.
  std::string debug_string() const;

 private:
  static std::strong_ordering compare(const Element& lhs, const Element& rhs);

  std::variant<mpz_class, Parts> rep_;
};

}  // namespace subinv
