#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace icpm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad modulus, wrong shapes, axiom violations).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class NoSolution : public Error {
 public:
  NoSolution() : Error("linear system has no solution") {}
};

/// A receiver cannot recover its demand from its side information and the code.
class Undecodable : public Error {
 public:
  explicit Undecodable(std::size_t receiver)
      : Error("receiver " + std::to_string(receiver) + " cannot decode"), receiver_(receiver) {}
  std::size_t receiver() const noexcept { return receiver_; }

 private:
  std::size_t receiver_;
};

class C1Violation : public Error {
 public:
  explicit C1Violation(const std::string& what) : Error("C1 violated: " + what) {}
};

class C2Violation : public Error {
 public:
  explicit C2Violation(std::size_t receiver)
      : Error("C2 violated at receiver " + std::to_string(receiver)), receiver_(receiver) {}
  std::size_t receiver() const noexcept { return receiver_; }

 private:
  std::size_t receiver_;
};

class NotPerfect : public Error {
 public:
  explicit NotPerfect(const std::string& what) : Error("code is not a perfect solution: " + what) {}
};

class NonInvertibleYBlock : public Error {
 public:
  NonInvertibleYBlock() : Error("y-block of the code matrix is not invertible") {}
};

class NonInvertibleLowerBlock : public Error {
 public:
  NonInvertibleLowerBlock() : Error("lower block of the code matrix is not invertible") {}
};

/// A search stopped at its candidate budget before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

}  // namespace icpm
