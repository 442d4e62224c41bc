#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring spec, matrix file, generator file or predicate spec.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands come from different rings, algebras or have incompatible shapes.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a commutative ring was handed a noncommutative one.
class NotCommutativeError : public Error {
 public:
  using Error::Error;
};

/// The determinant is not an admissible denominator of the localization.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or expansion would exceed its configured size limit.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : Error(what), required_(required), budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// An identity that must hold was found false.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace subinv
