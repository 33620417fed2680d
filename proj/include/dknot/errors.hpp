#pragma once

#include <stdexcept>
#include <string>

namespace dknot {

// Base class for all domain-level failures raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by operations that require a nonzero polynomial.
struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("zero polynomial not allowed here") {}
};

// Raised when the derived matrix R is singular but an inverse is needed.
struct DegenerateR : Error {
  DegenerateR() : Error("derived matrix R is singular") {}
};

// Raised when an operation requires input that passes validation.
struct InvalidCandidate : Error {
  explicit InvalidCandidate(const std::string& why)
      : Error("invalid candidate: " + why) {}
};

// Raised when two operands have different dimension parities.
struct ParityMismatch : Error {
  ParityMismatch() : Error("operands have different dimension parity") {}
};

// Raised when matrix/vector dimensions disagree.
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& why)
      : Error("dimension mismatch: " + why) {}
};

// Raised when a bilinear form that must be inverted is singular.
struct DegenerateForm : Error {
  DegenerateForm() : Error("bilinear form is degenerate") {}
};

// Raised when a move does not match the expected matrix pattern.
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& why)
      : Error("shape mismatch: " + why) {}
};

// Raised when move parameters violate the move's side conditions.
struct IllegalMove : Error {
  explicit IllegalMove(const std::string& why) : Error("illegal move: " + why) {}
};

// Raised when a claimed enlargement does not have the enlargement shape.
struct NotAnEnlargement : Error {
  NotAnEnlargement() : Error("matrix is not an enlargement of the given one") {}
};

// Raised when block dimensions passed to a block assembly are inconsistent.
struct BlockShapeError : Error {
  explicit BlockShapeError(const std::string& why)
      : Error("block shape error: " + why) {}
};

// Raised when a matrix expected to have integer Laurent entries does not.
struct IntegralityViolation : Error {
  explicit IntegralityViolation(const std::string& why)
      : Error("integrality violation: " + why) {}
};

// Raised when the adjoint matrix fails to have integer Laurent entries.
struct NonIntegralAdjoint : Error {
  NonIntegralAdjoint() : Error("adjoint matrix has an entry outside Z[t,t^-1]") {}
};

// Raised when the torsion module is not finite (rationalization nonzero).
struct InfiniteModule : Error {
  InfiniteModule() : Error("torsion module is infinite") {}
};

// Raised when an iterative search hits its configured bound.
struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& why)
      : Error("bound exceeded: " + why) {}
};

// Raised when a truncated linear solve over Z[t,t^-1] finds no solution.
struct LiftFailure : Error {
  explicit LiftFailure(const std::string& why) : Error("lift failure: " + why) {}
};

// Raised when a cooperative cancellation token is triggered.
struct Cancelled : Error {
  Cancelled() : Error("operation cancelled") {}
};

// Raised on malformed input text (JSON or number syntax).
struct ParseError : Error {
  explicit ParseError(const std::string& why) : Error("parse error: " + why) {}
};

}  // namespace dknot
