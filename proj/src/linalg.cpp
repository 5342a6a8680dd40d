#include "dq/linalg.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "dq/errors.hpp"
#include "dq/kernels.hpp"

namespace dq {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, FlopCounter& counter) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: a.cols must equal b.rows");
  }
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  DenseMatrix c(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c.row_data(i);
    for (std::size_t p = 0; p < k; ++p) {
      kernels::axpy(a(i, p), b.row_data(p), crow, n);
    }
  }
  counter.add(static_cast<std::uint64_t>(m) * k * n);
  return c;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  FlopCounter scratch;
  return matmul(a, b, scratch);
}

DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& rhs, FlopCounter& counter) {
  if (!a.is_square()) {
    throw ShapeError("lu_solve: matrix must be square");
  }
  if (rhs.rows() != a.rows()) {
    throw ShapeError("lu_solve: rhs.rows must equal a.rows");
  }
  const std::size_t n = a.rows();
  const double pivot_tol = 1e-13 * a.inf_norm();

  DenseMatrix lu = a;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  // Factor P a = L U in place, partial pivoting.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    }
    if (std::abs(lu(p, k)) <= pivot_tol) {
      throw SingularMatrixError("lu_solve: singular matrix (pivot " + std::to_string(lu(p, k)) +
                                " at column " + std::to_string(k) + ")");
    }
    if (p != k) {
      std::swap_ranges(lu.row_data(k), lu.row_data(k) + n, lu.row_data(p));
      std::swap(perm[k], perm[p]);
    }
    const double inv_pivot = 1.0 / lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double mult = lu(i, k) * inv_pivot;
      lu(i, k) = mult;
      kernels::axpy(-mult, lu.row_data(k) + k + 1, lu.row_data(i) + k + 1, n - k - 1);
    }
    // One division-equivalent per multiplier plus the row updates.
    counter.add((n - k - 1) * (n - k));
  }

  // Apply the row permutation to the right-hand side.
  const std::size_t nrhs = rhs.cols();
  DenseMatrix x(n, nrhs);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < nrhs; ++j) x(i, j) = rhs(perm[i], j);
  }

  // Forward substitution (unit lower factor), then back substitution.
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      kernels::axpy(-lu(i, k), x.row_data(k), x.row_data(i), nrhs);
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    kernels::scale(1.0 / lu(ii, ii), x.row_data(ii), nrhs);
    for (std::size_t k = 0; k < ii; ++k) {
      kernels::axpy(-lu(k, ii), x.row_data(ii), x.row_data(k), nrhs);
    }
  }
  counter.add(static_cast<std::uint64_t>(n) * n * nrhs);
  return x;
}

DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& rhs) {
  FlopCounter scratch;
  return lu_solve(a, rhs, scratch);
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, FlopCounter& counter) {
  DenseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p) {
        double* crow = c.row_data(i * b.rows() + p) + j * b.cols();
        const double* brow = b.row_data(p);
        for (std::size_t q = 0; q < b.cols(); ++q) crow[q] = aij * brow[q];
      }
    }
  }
  counter.add(static_cast<std::uint64_t>(a.rows()) * a.cols() * b.rows() * b.cols());
  return c;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  FlopCounter scratch;
  return kron(a, b, scratch);
}

DenseMatrix vec_stack(const DenseMatrix& m) {
  DenseMatrix v(m.rows() * m.cols(), 1);
  std::size_t t = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      v(t++, 0) = m(i, j);
    }
  }
  return v;
}

DenseMatrix unstack(const DenseMatrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) {
    throw ShapeError("unstack: vector length does not match target shape");
  }
  DenseMatrix m(rows, cols);
  std::size_t t = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      m(i, j) = v(t++, 0);
    }
  }
  return m;
}

}  // namespace dq
