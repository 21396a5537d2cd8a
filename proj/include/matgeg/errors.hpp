#pragma once

#include <stdexcept>
#include <string>

namespace matgeg {

// All engine failures derive from this so callers can catch one type.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : MathError {
  using MathError::MathError;
};

struct SizeMismatch : MathError {
  using MathError::MathError;
};

struct ParseError : MathError {
  using MathError::MathError;
};

struct DomainError : MathError {
  using MathError::MathError;
};

// Operator is not an element of D(W).
struct NonMember : MathError {
  using MathError::MathError;
};

struct NotCentral : MathError {
  using MathError::MathError;
};

struct DecompositionFailure : MathError {
  using MathError::MathError;
};

// Raised when a computation would exceed a configured term-count ceiling.
struct ResourceLimit : MathError {
  using MathError::MathError;
};

}  // namespace matgeg
