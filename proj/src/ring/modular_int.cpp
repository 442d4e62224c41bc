#include "subinv/ring/modular_int.hpp"

#include "subinv/errors.hpp"

namespace subinv {

mpz_class reduce_mod(const mpz_class& value, const mpz_class& modulus) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

ModularInt::ModularInt(mpz_class value, mpz_class modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 1) throw MismatchError("modulus must be a positive integer");
  value_ = reduce_mod(value, modulus_);
}

void ModularInt::check_same_modulus(const ModularInt& other) const {
  if (modulus_ != other.modulus_) throw MismatchError("residues taken modulo different moduli");
}

ModularInt ModularInt::operator+(const ModularInt& other) const {
  check_same_modulus(other);
  return ModularInt(value_ + other.value_, modulus_);
}

ModularInt ModularInt::operator-(const ModularInt& other) const {
  check_same_modulus(other);
  return ModularInt(value_ - other.value_, modulus_);
}

ModularInt ModularInt::operator*(const ModularInt& other) const {
  check_same_modulus(other);
  return ModularInt(value_ * other.value_, modulus_);
}

ModularInt ModularInt::operator-() const { return ModularInt(-value_, modulus_); }

std::optional<ModularInt> ModularInt::inverse() const {
  // s*value + t*m = g; a unit iff g = 1.
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
  if (modulus_ == 1) return ModularInt(0, modulus_);
  if (g != 1) return std::nullopt;
  return ModularInt(s, modulus_);
}

}  // namespace subinv
