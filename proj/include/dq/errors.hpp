#pragma once

#include <stdexcept>

namespace dq {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions are inconsistent.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument value is outside its documented domain (bad counts, unknown
/// method tags, exceeded size caps).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Pivot breakdown: the matrix is singular within the pivot tolerance.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// QR iteration failed to deflate within the sweep budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The Sylvester operands share an eigenvalue pair lambda(G) = -lambda(R),
/// so G X + X R = Q has no unique solution.
class NoUniqueSolutionError : public Error {
 public:
  using Error::Error;
};

/// Boundary-condition combination the elimination recipe does not cover.
class UnsupportedBcError : public Error {
 public:
  using Error::Error;
};

/// Collocation points too close together to form stable weights.
class IllConditionedGridError : public Error {
 public:
  using Error::Error;
};

/// Centrosymmetric fast path invoked on operands without the structure.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

}  // namespace dq
