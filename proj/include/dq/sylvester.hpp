#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dq/dense_matrix.hpp"
#include "dq/schur.hpp"

namespace dq {

/// The matrix equation G X + X R = Q.
struct SylvesterProblem {
  DenseMatrix g;  // n x n
  DenseMatrix r;  // m x m
  DenseMatrix q;  // n x m

  SylvesterProblem(DenseMatrix g_in, DenseMatrix r_in, DenseMatrix q_in);
  std::size_t n() const { return g.rows(); }
  std::size_t m() const { return r.rows(); }
};

/// Per-solve accounting: counted scalar multiplications, the model's
/// prediction for the method, wall time and the achieved relative residual
/// ||G X + X R - Q||_F / max(||Q||_F, eps).
struct SolveReport {
  std::string method;
  std::uint64_t counted_multiplications = 0;
  double model_multiplications = 0.0;
  double wall_time_seconds = 0.0;
  double relative_residual = 0.0;
  std::string note;  // e.g. fast-path fallback explanation
};

struct SylvesterSolution {
  DenseMatrix x;
  SolveReport report;
};

inline constexpr std::size_t kDefaultKroneckerCap = 4096;

/// Schur/Hessenberg reduction of an operand pair, reusable across many
/// right-hand sides (each solve then costs O(n^2 m + n m^2)).
class SylvesterFactorization {
 public:
  /// Real Schur form of both operands; throws NoUniqueSolutionError when an
  /// eigenvalue of g collides with an eigenvalue of -r within
  /// 1e-12 * (||g||_F + ||r||_F).
  static SylvesterFactorization bartels_stewart(const DenseMatrix& g, const DenseMatrix& r,
                                                FlopCounter& counter);

  /// Hessenberg form of g, Schur form of r. Cheaper to factor than the full
  /// double-Schur route; eigenvalue collisions surface as singular shifted
  /// systems during solve().
  static SylvesterFactorization hessenberg_schur(const DenseMatrix& g, const DenseMatrix& r,
                                                 FlopCounter& counter);

  DenseMatrix solve(const DenseMatrix& q, FlopCounter& counter) const;

  std::size_t n() const { return ug_.rows(); }
  std::size_t m() const { return ur_.rows(); }

 private:
  bool hessenberg_mode_ = false;
  DenseMatrix ug_, tg_;  // g = ug tg ug^T
  DenseMatrix ur_, tr_;  // r = ur tr ur^T
};

/// Four-step solve: Schur-reduce both operands, transform the right-hand
/// side, back-substitute on the quasi-triangular factors, transform back.
SylvesterSolution solve_bartels_stewart(const SylvesterProblem& p);

/// Variant that leaves the row operand in Hessenberg form; strictly fewer
/// multiplications than the double-Schur route on dense problems.
SylvesterSolution solve_hessenberg_schur(const SylvesterProblem& p);

/// Baseline: assemble (I kron G + R^T kron I) under the column-stacking vec
/// convention and apply Gaussian elimination. Serves as the correctness
/// oracle for the reduction methods. Throws ParameterError when n*m exceeds
/// the cap.
SylvesterSolution solve_kronecker_baseline(const SylvesterProblem& p,
                                           std::size_t max_unknowns = kDefaultKroneckerCap);

/// Analytic multiplication counts. Tags:
///   "r-thr"            n^3 + 4/3 m^3 + 7 n^2 m + 5 n m^2 + n^2
///   "kronecker-gauss"  (n m)^3 / 3
///   "bartels-stewart", "hessenberg-schur"
///                      calibration curves fitted to the instrumented counts
///   "centro-split"     two r-thr solves at half size
/// Unknown tags throw ParameterError.
double flop_model(std::string_view method, std::size_t n, std::size_t m);

double relative_residual(const SylvesterProblem& p, const DenseMatrix& x);

/// First eigenvalue pair with |lambda_g + lambda_r| <= tol, if any.
std::optional<std::pair<std::complex<double>, std::complex<double>>> find_spectral_collision(
    const std::vector<std::complex<double>>& eig_g,
    const std::vector<std::complex<double>>& eig_r, double tol);

/// Back-substitution core for T_g Y + Y T_r = F with both factors
/// quasi-upper-triangular; 2x2 couplings go through small dense solves.
DenseMatrix solve_quasi_triangular_sylvester(const DenseMatrix& tg, const DenseMatrix& tr,
                                             const DenseMatrix& f, FlopCounter& counter);

}  // namespace dq
