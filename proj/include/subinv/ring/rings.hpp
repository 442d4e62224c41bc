#pragma once

#include <cstddef>

#include "subinv/ring/ring.hpp"

namespace subinv {

/// The integers.
class IntegerRing final : public Ring {
 public:
  std::string descriptor() const override { return "int"; }
  bool is_commutative() const override { return true; }
  bool is_finite() const override { return false; }

  Element zero() const override { return Element(0L); }
  Element one() const override { return Element(1L); }
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  bool equal(const Element& a, const Element& b) const override;
  std::optional<Element> try_invert(const Element& a) const override;
  Element from_integer(const mpz_class& value) const override { return Element(value); }
  bool is_valid(const Element& a) const override { return a.is_scalar(); }
  Element random(std::mt19937_64& rng) const override;

  nlohmann::json to_json(const Element& a) const override;
  Element from_json(const nlohmann::json& j) const override;
  std::string render(const Element& a) const override;
};

/// Z/m for any m >= 1.
class ModularRing final : public Ring {
 public:
  explicit ModularRing(mpz_class modulus);

  const mpz_class& modulus() const noexcept { return modulus_; }

  std::string descriptor() const override;
  bool is_commutative() const override { return true; }
  bool is_finite() const override { return true; }

  Element zero() const override { return Element(0L); }
  Element one() const override;
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  bool equal(const Element& a, const Element& b) const override;
  std::optional<Element> try_invert(const Element& a) const override;
  Element from_integer(const mpz_class& value) const override;
  bool is_valid(const Element& a) const override;
  std::vector<Element> elements() const override;
  std::optional<std::uint64_t> cardinality() const override;
  Element random(std::mt19937_64& rng) const override;

  nlohmann::json to_json(const Element& a) const override;
  Element from_json(const nlohmann::json& j) const override;
  std::string render(const Element& a) const override;

 private:
  mpz_class modulus_;
};

/// k x k matrices over a base ring; elements store k*k entries row-major.
class MatrixRing final : public Ring {
 public:
  MatrixRing(RingHandle base, std::size_t k);

  const RingHandle& base() const noexcept { return base_; }
  std::size_t block_size() const noexcept { return k_; }

  std::string descriptor() const override;
  bool is_commutative() const override;
  bool is_finite() const override { return base_.is_finite(); }

  Element zero() const override;
  Element one() const override;
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  bool equal(const Element& a, const Element& b) const override;

  /// Over a commutative base: unit iff the determinant is a unit, inverse by
  /// adjugate. Over a base that is itself a matrix ring: by flattening.
  /// Throws MismatchError on a malformed operand, NotCommutativeError for
  /// any other noncommutative base.
  std::optional<Element> try_invert(const Element& a) const override;
  Element from_integer(const mpz_class& value) const override;
  bool is_valid(const Element& a) const override;
  std::vector<Element> elements() const override;
  std::optional<std::uint64_t> cardinality() const override;
  Element random(std::mt19937_64& rng) const override;

  nlohmann::json to_json(const Element& a) const override;
  Element from_json(const nlohmann::json& j) const override;
  std::string render(const Element& a) const override;

  /// Entry (i, j) of a matrix-ring element, 0-based.
  const Element& entry(const Element& a, std::size_t i, std::size_t j) const;

 private:
  void check_shape(const Element& a) const;

  RingHandle base_;
  std::size_t k_;
};

/// Dual numbers x + y*eps with eps^2 = 0, i.e. the matrices x*I + y*E inside
/// Mat_2(base) with E = [[0,1],[0,0]]. Elements store (x, y).
class DualNumberRing final : public Ring {
 public:
  explicit DualNumberRing(RingHandle base);

  const RingHandle& base() const noexcept { return base_; }

  std::string descriptor() const override;
  bool is_commutative() const override { return base_.is_commutative(); }
  bool is_finite() const override { return base_.is_finite(); }

  Element zero() const override;
  Element one() const override;
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  bool equal(const Element& a, const Element& b) const override;
  std::optional<Element> try_invert(const Element& a) const override;
  Element from_integer(const mpz_class& value) const override;
  bool is_valid(const Element& a) const override;
  std::vector<Element> elements() const override;
  std::optional<std::uint64_t> cardinality() const override;
  Element random(std::mt19937_64& rng) const override;

  nlohmann::json to_json(const Element& a) const override;
  Element from_json(const nlohmann::json& j) const override;
  std::string render(const Element& a) const override;

  Element make(Element x, Element y) const;

 private:
  void check_shape(const Element& a) const;

  RingHandle base_;
};

}  // namespace subinv
