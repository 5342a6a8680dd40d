#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "dq/dense_matrix.hpp"

namespace dq {

/// Real Schur decomposition a = u t u^T with u orthogonal and t quasi-upper
/// triangular: the diagonal carries 1x1 blocks (real eigenvalues) and 2x2
/// blocks with complex-conjugate eigenvalue pairs.
struct SchurForm {
  DenseMatrix u;
  DenseMatrix t;
  std::size_t source_dim = 0;
};

/// Orthogonal reduction a = u h u^T with h upper Hessenberg.
struct HessenbergForm {
  DenseMatrix u;
  DenseMatrix h;
};

HessenbergForm hessenberg_reduce(const DenseMatrix& a, FlopCounter& counter);

/// Francis double-shift QR on the Hessenberg form, with exceptional shifts
/// every 10 stalled sweeps. A subdiagonal entry h(i+1,i) deflates when
/// |h(i+1,i)| <= tol * (|h(i,i)| + |h(i+1,i+1)|). Throws ConvergenceError
/// (naming the stuck subdiagonal index) after max_iter sweeps.
SchurForm real_schur(const DenseMatrix& a, std::size_t max_iter, double tol,
                     FlopCounter& counter);

/// Defaults: max_iter = 30 * dim, tol = 1e-14.
SchurForm real_schur(const DenseMatrix& a);
SchurForm real_schur(const DenseMatrix& a, FlopCounter& counter);

/// Block eigenvalues read off the quasi-triangular factor.
std::vector<std::complex<double>> schur_eigenvalues(const DenseMatrix& t);

}  // namespace dq
