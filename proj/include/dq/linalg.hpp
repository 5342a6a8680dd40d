#pragma once

#include "dq/dense_matrix.hpp"

namespace dq {

/// a * b. Counts exactly a.rows * a.cols * b.cols multiplications.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, FlopCounter& counter);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// Solves a X = rhs (rhs may have several columns) by LU factorization with
/// partial pivoting. Throws SingularMatrixError when a pivot falls below
/// 1e-13 * ||a||_inf.
DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& rhs, FlopCounter& counter);
DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& rhs);

/// Kronecker product [a_ij * b]; (a.rows*b.rows) x (a.cols*b.cols).
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, FlopCounter& counter);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Column-stacking vec: stacks the columns of m into a single column vector,
/// so vec(A X B^T) = (B kron A) vec(X). unstack is the exact inverse.
DenseMatrix vec_stack(const DenseMatrix& m);
DenseMatrix unstack(const DenseMatrix& v, std::size_t rows, std::size_t cols);

}  // namespace dq
