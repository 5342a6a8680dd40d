#pragma once

#include <cstddef>
#include <vector>

#include "dq/dense_matrix.hpp"

namespace dq {

enum class PointKind { uniform, chebyshev_lobatto, explicit_points };

/// One axis of collocation points on [0, 1]: endpoints exactly 0 and 1,
/// strictly increasing. The symmetric flag records whether the set satisfies
/// x_i + x_{N-1-i} = 1 within 1e-14.
struct PointSet {
  PointKind kind = PointKind::explicit_points;
  std::vector<double> points;
  bool symmetric = false;

  std::size_t size() const { return points.size(); }
};

/// x_i = (1 - cos(pi i / (n-1))) / 2, i = 0..n-1 (symmetric by construction).
PointSet chebyshev_lobatto_points(std::size_t n);

/// x_i = i / (n-1).
PointSet uniform_points(std::size_t n);

/// Validates explicit points (endpoints, monotonicity) and tags symmetry.
PointSet explicit_point_set(std::vector<double> points);

/// Collocation grid: one point set per spatial axis, at least 3 points each.
struct GridSpec {
  std::vector<PointSet> axes;

  explicit GridSpec(std::vector<PointSet> axes_in);
  const PointSet& axis(std::size_t i) const { return axes.at(i); }
};

/// Full differentiation matrices on one axis: a approximates d/dx on the
/// point set (exact for polynomials up to degree N-1), b = a * a approximates
/// d^2/dx^2 in the same polynomial class.
struct DqOperator {
  DenseMatrix a;
  DenseMatrix b;
  PointSet points;
};

/// Builds the weights by the explicit Lagrange product formulas; the diagonal
/// is the negative off-diagonal row sum. Throws IllConditionedGridError when
/// points nearly coincide (spacing < 1e-12).
DqOperator build_dq_operator(const PointSet& points);

}  // namespace dq
