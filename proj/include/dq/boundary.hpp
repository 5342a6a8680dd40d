#pragma once

#include <cstddef>
#include <vector>

#include "dq/dense_matrix.hpp"
#include "dq/dq_operators.hpp"

namespace dq {

enum class BcKind { dirichlet, neumann };

/// One face of an axis: a prescribed value (dirichlet) or a prescribed
/// first-derivative flux (neumann), constant along the face.
struct FaceBc {
  BcKind kind = BcKind::dirichlet;
  double value = 0.0;
};

/// Both faces of one axis. Supported combinations: dirichlet-dirichlet and
/// dirichlet-neumann in either orientation; neumann on both faces is
/// rejected (the one-face elimination has no recipe for it).
struct AxisBc {
  FaceBc left;
  FaceBc right;
};

/// Affine maps expressing the two boundary values from the interior values:
///   phi_0     = left_coeff  . phi_interior + left_const
///   phi_{N-1} = right_coeff . phi_interior + right_const
struct BoundaryRecovery {
  std::vector<double> left_coeff;
  std::vector<double> right_coeff;
  double left_const = 0.0;
  double right_const = 0.0;
};

/// Interior-only operators after boundary elimination: for any interior
/// vector p and the recovered full vector p_full,
///   [A p_full]_interior = a_bar p + a_offset,
///   [B p_full]_interior = b_bar p + b_offset.
struct ReducedOperator {
  DenseMatrix a_bar;
  DenseMatrix b_bar;
  std::vector<double> a_offset;
  std::vector<double> b_offset;
  BoundaryRecovery recovery;

  std::size_t interior_size() const { return a_bar.rows(); }
};

/// Eliminates the two boundary rows/columns of the full operators. Throws
/// UnsupportedBcError for neumann-neumann and SingularMatrixError when a
/// neumann face's own diagonal weight is below 1e-10 * ||A||_inf.
ReducedOperator reduce_operator(const DqOperator& op, const AxisBc& bc);

/// Column-constant stack of an offset vector: every one of the m columns
/// equals v.
DenseMatrix stack_offset(const std::vector<double>& v, std::size_t m);

/// Boundary values of one grid line recovered from its interior values.
struct RecoveredEdge {
  double left;
  double right;
};
RecoveredEdge recover_edge(const BoundaryRecovery& rec, const double* interior,
                           std::size_t stride, std::size_t n);

/// Full (N_x x N_y) field from the interior block: interior values are copied,
/// then x-face rows and y-face columns are filled from the recovery maps
/// (x faces first, then y faces across the full rows).
DenseMatrix reconstruct_full_field(const DenseMatrix& interior, const ReducedOperator& red_x,
                                   const ReducedOperator& red_y);

}  // namespace dq
