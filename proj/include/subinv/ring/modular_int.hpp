#pragma once

#include <gmpxx.h>

#include <optional>

namespace subinv {

/// Residue class modulo m >= 1, always stored reduced into [0, m).
///
/// Composite moduli are allowed; zero divisors are ordinary elements.
class ModularInt {
 public:
  ModularInt(mpz_class value, mpz_class modulus);

  const mpz_class& value() const noexcept { return value_; }
  const mpz_class& modulus() const noexcept { return modulus_; }

  ModularInt operator+(const ModularInt& other) const;
  ModularInt operator-(const ModularInt& other) const;
  ModularInt operator*(const ModularInt& other) const;
  ModularInt operator-() const;

  /// Extended-gcd inverse; present iff gcd(value, m) = 1.
  std::optional<ModularInt> inverse() const;

  friend bool operator==(const ModularInt& a, const ModularInt& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  void check_same_modulus(const ModularInt& other) const;

  mpz_class value_;
  mpz_class modulus_;
};

/// Canonical representative of `value` modulo `modulus` in [0, modulus).
mpz_class reduce_mod(const mpz_class& value, const mpz_class& modulus);

}  // namespace subinv
