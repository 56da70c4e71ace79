#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace f5c {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t lhs, std::size_t rhs)
      : Error("monomial arity mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("monomial is not divisible") {}
};

/// Head monomial / head coefficient requested on the zero polynomial, or a
/// zero operand passed where a nonzero one is required.
class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& what)
      : Error("zero polynomial: " + what) {}
};

class FieldError : public Error {
 public:
  using Error::Error;
};

/// Input system violates a driver precondition (empty, zero entry,
/// non-homogeneous generator).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The labeled-polynomial store grew past its configured cap.
class StoreCapExceeded : public Error {
 public:
  explicit StoreCapExceeded(std::size_t cap)
      : Error("store size cap exceeded (" + std::to_string(cap) + ")") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace f5c
