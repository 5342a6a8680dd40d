#include "dq/boundary.hpp"

#include <cmath>
#include <string>

#include "dq/errors.hpp"

namespace dq {
namespace {

// Recovery maps for one axis. With a dirichlet face the map is the constant
// h; with a neumann face the quadrature row of A is solved for the boundary
// value, which couples it to the interior values and the opposite (dirichlet)
// boundary value.
BoundaryRecovery make_recovery(const DenseMatrix& a, const AxisBc& bc) {
  const std::size_t n_full = a.rows();
  const std::size_t n = n_full - 2;
  BoundaryRecovery rec;
  rec.left_coeff.assign(n, 0.0);
  rec.right_coeff.assign(n, 0.0);

  if (bc.left.kind == BcKind::neumann && bc.right.kind == BcKind::neumann) {
    throw UnsupportedBcError("reduce_operator: neumann on both faces is not supported");
  }

  const double pivot_tol = 1e-10 * a.inf_norm();
  if (bc.left.kind == BcKind::dirichlet) {
    rec.left_const = bc.left.value;
  }
  if (bc.right.kind == BcKind::dirichlet) {
    rec.right_const = bc.right.value;
  }

  if (bc.right.kind == BcKind::neumann) {
    // A_{N-1,0} phi_0 + sum_j A_{N-1,j} phi_j + A_{N-1,N-1} phi_{N-1} = q
    const double pivot = a(n_full - 1, n_full - 1);
    if (std::abs(pivot) <= pivot_tol) {
      throw SingularMatrixError("reduce_operator: near-zero neumann pivot A(N-1,N-1) = " +
                                std::to_string(pivot));
    }
    for (std::size_t j = 0; j < n; ++j) {
      rec.right_coeff[j] = -a(n_full - 1, j + 1) / pivot;
    }
    rec.right_const = (bc.right.value - a(n_full - 1, 0) * bc.left.value) / pivot;
  } else if (bc.left.kind == BcKind::neumann) {
    // Mirrored elimination on the first quadrature row.
    const double pivot = a(0, 0);
    if (std::abs(pivot) <= pivot_tol) {
      throw SingularMatrixError("reduce_operator: near-zero neumann pivot A(0,0) = " +
                                std::to_string(pivot));
    }
    for (std::size_t j = 0; j < n; ++j) {
      rec.left_coeff[j] = -a(0, j + 1) / pivot;
    }
    rec.left_const = (bc.left.value - a(0, n_full - 1) * bc.right.value) / pivot;
  }
  return rec;
}

// Interior rows of M applied to the recovered full vector:
//   M_bar = M_int + M(:,0) c_left^T + M(:,N-1) c_right^T
//   offset = M(:,0) d_left + M(:,N-1) d_right
// The outer-product terms are skipped for dirichlet faces (their recovery
// coefficients are identically zero), which keeps the homogeneous-dirichlet
// reduction a bit-exact submatrix extraction.
void reduce_one(const DenseMatrix& m, const BoundaryRecovery& rec, bool left_neumann,
                bool right_neumann, DenseMatrix& m_bar, std::vector<double>& offset) {
  const std::size_t n_full = m.rows();
  const std::size_t n = n_full - 2;
  m_bar = DenseMatrix(n, n);
  offset.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t row = i + 1;
    for (std::size_t j = 0; j < n; ++j) {
      double v = m(row, j + 1);
      if (left_neumann) v += m(row, 0) * rec.left_coeff[j];
      if (right_neumann) v += m(row, n_full - 1) * rec.right_coeff[j];
      m_bar(i, j) = v;
    }
    offset[i] = m(row, 0) * rec.left_const + m(row, n_full - 1) * rec.right_const;
  }
}

}  // namespace

ReducedOperator reduce_operator(const DqOperator& op, const AxisBc& bc) {
  if (op.a.rows() < 3) {
    throw ParameterError("reduce_operator: need at least 3 points per axis");
  }
  ReducedOperator red;
  red.recovery = make_recovery(op.a, bc);
  const bool ln = bc.left.kind == BcKind::neumann;
  const bool rn = bc.right.kind == BcKind::neumann;
  reduce_one(op.a, red.recovery, ln, rn, red.a_bar, red.a_offset);
  reduce_one(op.b, red.recovery, ln, rn, red.b_bar, red.b_offset);
  return red;
}

DenseMatrix stack_offset(const std::vector<double>& v, std::size_t m) {
  DenseMatrix out(v.size(), m);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) out(i, j) = v[i];
  }
  return out;
}

RecoveredEdge recover_edge(const BoundaryRecovery& rec, const double* interior,
                           std::size_t stride, std::size_t n) {
  double left = rec.left_const;
  double right = rec.right_const;
  for (std::size_t j = 0; j < n; ++j) {
    const double v = interior[j * stride];
    left += rec.left_coeff[j] * v;
    right += rec.right_coeff[j] * v;
  }
  return {left, right};
}

DenseMatrix reconstruct_full_field(const DenseMatrix& interior, const ReducedOperator& red_x,
                                   const ReducedOperator& red_y) {
  const std::size_t n = interior.rows();
  const std::size_t m = interior.cols();
  if (red_x.interior_size() != n || red_y.interior_size() != m) {
    throw ShapeError("reconstruct_full_field: interior shape does not match reductions");
  }
  const std::size_t nx = n + 2;
  const std::size_t ny = m + 2;
  DenseMatrix full(nx, ny);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) full(i + 1, j + 1) = interior(i, j);
  }
  // x faces from each interior column, then y faces across the full rows.
  for (std::size_t j = 0; j < m; ++j) {
    const RecoveredEdge e = recover_edge(red_x.recovery, &full(1, j + 1), ny, n);
    full(0, j + 1) = e.left;
    full(nx - 1, j + 1) = e.right;
  }
  for (std::size_t i = 0; i < nx; ++i) {
    const RecoveredEdge e = recover_edge(red_y.recovery, &full(i, 1), 1, m);
    full(i, 0) = e.left;
    full(i, ny - 1) = e.right;
  }
  return full;
}

}  // namespace dq
