#pragma once

#include <cstddef>

#include "dq/dense_matrix.hpp"
#include "dq/sylvester.hpp"

namespace dq {

enum class SymmetryTag { centrosymmetric, skew_centrosymmetric, none };

/// Structure of a square matrix under the exchange (anti-identity) matrix J:
/// centrosymmetric when J M J = M, skew-centrosymmetric when J M J = -M,
/// both within 1e-12 * ||M||_F.
struct SymmetryClass {
  SymmetryTag tag = SymmetryTag::none;
  std::size_t exchange_dim = 0;
};

SymmetryClass classify_symmetry(const DenseMatrix& m);

/// Orthogonal block-diagonalization of a centrosymmetric matrix:
/// K^T M K = blockdiag(plus_block, minus_block) with K built from the
/// exchange matrix: columns (e_i + J e_i)/sqrt(2) and (e_i - J e_i)/sqrt(2),
/// the middle column left unchanged for odd dimension. Block sizes are
/// ceil(n/2) and floor(n/2).
struct CentroSplit {
  DenseMatrix transform;
  DenseMatrix plus_block;
  DenseMatrix minus_block;
};

/// Throws SymmetryError when classify_symmetry(m) is not centrosymmetric.
CentroSplit split_centrosymmetric(const DenseMatrix& m);

/// Half-size fast path for G X + X R = Q with both operands centrosymmetric:
/// transforms Q into the split basis, solves the four independent
/// sub-problems against shared half-size Schur factorizations, and maps the
/// result back. Throws SymmetryError if an operand lacks the structure.
SylvesterSolution solve_sylvester_centro(const SylvesterProblem& p);

/// Dispatch used by "auto" method selection: centro-split when both operands
/// pass the symmetry test, otherwise bartels-stewart with a report note.
SylvesterSolution solve_sylvester_auto(const SylvesterProblem& p);

}  // namespace dq
