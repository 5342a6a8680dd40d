#include "dq/sylvester.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "dq/errors.hpp"
#include "dq/kernels.hpp"
#include "dq/linalg.hpp"

namespace dq {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Diagonal block starts/sizes of a quasi-upper-triangular matrix.
std::vector<std::pair<std::size_t, std::size_t>> diagonal_blocks(const DenseMatrix& t) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  const std::size_t n = t.rows();
  std::size_t i = 0;
  while (i < n) {
    const std::size_t size = (i + 1 < n && t(i + 1, i) != 0.0) ? 2 : 1;
    blocks.emplace_back(i, size);
    i += size;
  }
  return blocks;
}

// y = the solution of the 2x2 system [[a00,a01],[a10,a11]] y = [b0, b1],
// partial pivoting; 6 multiplications.
std::pair<double, double> solve_2x2(double a00, double a01, double a10, double a11, double b0,
                                    double b1) {
  const double scale = std::abs(a00) + std::abs(a01) + std::abs(a10) + std::abs(a11);
  if (std::abs(a10) > std::abs(a00)) {
    std::swap(a00, a10);
    std::swap(a01, a11);
    std::swap(b0, b1);
  }
  if (std::abs(a00) <= 1e-13 * scale) {
    throw NoUniqueSolutionError("sylvester back-substitution: singular 2x2 diagonal system");
  }
  const double m = a10 / a00;
  a11 -= m * a01;
  b1 -= m * b0;
  if (std::abs(a11) <= 1e-13 * scale) {
    throw NoUniqueSolutionError("sylvester back-substitution: singular 2x2 diagonal system");
  }
  const double y1 = b1 / a11;
  const double y0 = (b0 - a01 * y1) / a00;
  return {y0, y1};
}

// Gaussian elimination for a dense-stored matrix whose nonzeros below the
// diagonal sit within `band` rows of it (upper Hessenberg: band = 1).
// Partial pivoting searches only the band, which preserves the structure.
std::vector<double> banded_lower_solve(DenseMatrix m, std::size_t band, std::vector<double> rhs,
                                       FlopCounter& fc) {
  const std::size_t dim = m.rows();
  const double tiny = 1e-13 * m.inf_norm();
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t p = c;
    const std::size_t last = std::min(c + band, dim - 1);
    for (std::size_t r = c + 1; r <= last; ++r) {
      if (std::abs(m(r, c)) > std::abs(m(p, c))) p = r;
    }
    if (std::abs(m(p, c)) <= tiny) {
      throw NoUniqueSolutionError(
          "hessenberg-schur solve: singular shifted system at column " + std::to_string(c) +
          "; the spectra of G and -R appear to intersect");
    }
    if (p != c) {
      std::swap_ranges(m.row_data(c) + c, m.row_data(c) + dim, m.row_data(p) + c);
      std::swap(rhs[c], rhs[p]);
    }
    const double inv_pivot = 1.0 / m(c, c);
    for (std::size_t r = c + 1; r <= last; ++r) {
      const double mult = m(r, c) * inv_pivot;
      m(r, c) = 0.0;
      kernels::axpy(-mult, m.row_data(c) + c + 1, m.row_data(r) + c + 1, dim - c - 1);
      rhs[r] -= mult * rhs[c];
      fc.add(dim - c + 1);
    }
  }
  std::vector<double> y(dim, 0.0);
  for (std::size_t rr = dim; rr-- > 0;) {
    const double s = kernels::dot(m.row_data(rr) + rr + 1, y.data() + rr + 1, dim - rr - 1);
    y[rr] = (rhs[rr] - s) / m(rr, rr);
    fc.add(dim - rr);
  }
  return y;
}

// Column solve of (H + lambda I) y = w for upper-Hessenberg H.
std::vector<double> hessenberg_shifted_solve(const DenseMatrix& h, double lambda,
                                             std::vector<double> w, FlopCounter& fc) {
  DenseMatrix m = h;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += lambda;
  return banded_lower_solve(std::move(m), 1, std::move(w), fc);
}

// Coupled two-column solve H [y1 y2] + [y1 y2] L = [w1 w2] with L the 2x2
// block [[l00,l01],[l10,l11]], via the row-interleaved 2n system of lower
// bandwidth 2.
void hessenberg_coupled_solve(const DenseMatrix& h, double l00, double l01, double l10,
                              double l11, std::vector<double>& w1, std::vector<double>& w2,
                              FlopCounter& fc) {
  const std::size_t n = h.rows();
  DenseMatrix m(2 * n, 2 * n);
  std::vector<double> rhs(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = (i == 0 ? 0 : i - 1); k < n; ++k) {
      m(2 * i, 2 * k) = h(i, k);
      m(2 * i + 1, 2 * k + 1) = h(i, k);
    }
    m(2 * i, 2 * i) += l00;
    m(2 * i, 2 * i + 1) = l10;
    m(2 * i + 1, 2 * i) = l01;
    m(2 * i + 1, 2 * i + 1) += l11;
    rhs[2 * i] = w1[i];
    rhs[2 * i + 1] = w2[i];
  }
  const std::vector<double> z = banded_lower_solve(std::move(m), 2, std::move(rhs), fc);
  for (std::size_t i = 0; i < n; ++i) {
    w1[i] = z[2 * i];
    w2[i] = z[2 * i + 1];
  }
}

// After the columns of block J are known, fold them out of the remaining
// right-hand-side columns: W(:, j') -= Y(:, jb) tr(jb, j').
void fold_block_into_remaining(const DenseMatrix& y, const DenseMatrix& tr, std::size_t j_end,
                               std::size_t block_start, std::size_t block_size, DenseMatrix& w,
                               FlopCounter& fc) {
  const std::size_t n = y.rows();
  const std::size_t m = tr.rows();
  if (j_end >= m) return;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < block_size; ++b) {
      kernels::axpy(-y(i, block_start + b), tr.row_data(block_start + b) + j_end,
                    w.row_data(i) + j_end, m - j_end);
    }
  }
  fc.add(n * block_size * (m - j_end));
}

void require_problem_shapes(const DenseMatrix& g, const DenseMatrix& r, const DenseMatrix& q) {
  if (!g.is_square() || !r.is_square()) {
    throw ShapeError("sylvester: G and R must be square");
  }
  if (q.rows() != g.rows() || q.cols() != r.rows()) {
    throw ShapeError("sylvester: Q must be n x m");
  }
}

std::string complex_to_string(std::complex<double> z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "-") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

SylvesterProblem::SylvesterProblem(DenseMatrix g_in, DenseMatrix r_in, DenseMatrix q_in)
    : g(std::move(g_in)), r(std::move(r_in)), q(std::move(q_in)) {
  require_problem_shapes(g, r, q);
}

std::optional<std::pair<std::complex<double>, std::complex<double>>> find_spectral_collision(
    const std::vector<std::complex<double>>& eig_g,
    const std::vector<std::complex<double>>& eig_r, double tol) {
  for (const auto& lg : eig_g) {
    for (const auto& lr : eig_r) {
      if (std::abs(lg + lr) <= tol) return std::make_pair(lg, lr);
    }
  }
  return std::nullopt;
}

DenseMatrix solve_quasi_triangular_sylvester(const DenseMatrix& tg, const DenseMatrix& tr,
                                             const DenseMatrix& f, FlopCounter& counter) {
  const std::size_t n = tg.rows();
  const std::size_t m = tr.rows();
  const auto g_blocks = diagonal_blocks(tg);
  DenseMatrix w = f;
  DenseMatrix y(n, m);

  std::size_t j = 0;
  while (j < m) {
    const std::size_t bj = (j + 1 < m && tr(j + 1, j) != 0.0) ? 2 : 1;
    if (bj == 1) {
      const double lam = tr(j, j);
      // Back-substitute over the diagonal blocks of tg, bottom-up.
      for (auto it = g_blocks.rbegin(); it != g_blocks.rend(); ++it) {
        const auto [p, bi] = *it;
        if (bi == 1) {
          const double denom = tg(p, p) + lam;
          if (std::abs(denom) <= 1e-13 * (std::abs(tg(p, p)) + std::abs(lam) + 1.0)) {
            throw NoUniqueSolutionError(
                "sylvester back-substitution: vanishing diagonal denominator");
          }
          w(p, j) /= denom;
          counter.add(1);
        } else {
          const auto [y0, y1] = solve_2x2(tg(p, p) + lam, tg(p, p + 1), tg(p + 1, p),
                                          tg(p + 1, p + 1) + lam, w(p, j), w(p + 1, j));
          w(p, j) = y0;
          w(p + 1, j) = y1;
          counter.add(6);
        }
        for (std::size_t r = 0; r < p; ++r) {
          double s = w(r, j);
          for (std::size_t b = 0; b < bi; ++b) s -= tg(r, p + b) * w(p + b, j);
          w(r, j) = s;
        }
        counter.add(p * bi);
      }
      for (std::size_t i = 0; i < n; ++i) y(i, j) = w(i, j);
    } else {
      // Two coupled columns; each tg block yields a <=4x4 local system
      //   (I_2 kron TG_II + L^T kron I_bi) vec(Y_IJ) = vec(W_IJ).
      const DenseMatrix l = DenseMatrix::from_rows(
          {{tr(j, j), tr(j, j + 1)}, {tr(j + 1, j), tr(j + 1, j + 1)}});
      for (auto it = g_blocks.rbegin(); it != g_blocks.rend(); ++it) {
        const auto [p, bi] = *it;
        DenseMatrix tgb(bi, bi);
        for (std::size_t a = 0; a < bi; ++a) {
          for (std::size_t b = 0; b < bi; ++b) tgb(a, b) = tg(p + a, p + b);
        }
        DenseMatrix local = add(kron(DenseMatrix::identity(2), tgb, counter),
                                kron(l.transposed(), DenseMatrix::identity(bi), counter));
        DenseMatrix rhs(2 * bi, 1);
        for (std::size_t b = 0; b < bi; ++b) {
          rhs(b, 0) = w(p + b, j);
          rhs(bi + b, 0) = w(p + b, j + 1);
        }
        DenseMatrix sol;
        try {
          sol = lu_solve(local, rhs, counter);
        } catch (const SingularMatrixError&) {
          throw NoUniqueSolutionError(
              "sylvester back-substitution: singular coupled block system");
        }
        for (std::size_t b = 0; b < bi; ++b) {
          w(p + b, j) = sol(b, 0);
          w(p + b, j + 1) = sol(bi + b, 0);
        }
        for (std::size_t r = 0; r < p; ++r) {
          double s0 = w(r, j), s1 = w(r, j + 1);
          for (std::size_t b = 0; b < bi; ++b) {
            s0 -= tg(r, p + b) * w(p + b, j);
            s1 -= tg(r, p + b) * w(p + b, j + 1);
          }
          w(r, j) = s0;
          w(r, j + 1) = s1;
        }
        counter.add(2 * p * bi);
      }
      for (std::size_t i = 0; i < n; ++i) {
        y(i, j) = w(i, j);
        y(i, j + 1) = w(i, j + 1);
      }
    }
    fold_block_into_remaining(y, tr, j + bj, j, bj, w, counter);
    j += bj;
  }
  return y;
}

SylvesterFactorization SylvesterFactorization::bartels_stewart(const DenseMatrix& g,
                                                               const DenseMatrix& r,
                                                               FlopCounter& counter) {
  SylvesterFactorization f;
  f.hessenberg_mode_ = false;
  SchurForm sg = real_schur(g, counter);
  SchurForm sr = real_schur(r, counter);
  const double tol = 1e-12 * (g.frobenius_norm() + r.frobenius_norm());
  const auto collision =
      find_spectral_collision(schur_eigenvalues(sg.t), schur_eigenvalues(sr.t), tol);
  if (collision) {
    throw NoUniqueSolutionError("sylvester: eigenvalue collision, lambda(G) = " +
                                complex_to_string(collision->first) + " vs lambda(R) = " +
                                complex_to_string(collision->second));
  }
  f.ug_ = std::move(sg.u);
  f.tg_ = std::move(sg.t);
  f.ur_ = std::move(sr.u);
  f.tr_ = std::move(sr.t);
  return f;
}

SylvesterFactorization SylvesterFactorization::hessenberg_schur(const DenseMatrix& g,
                                                                const DenseMatrix& r,
                                                                FlopCounter& counter) {
  SylvesterFactorization f;
  f.hessenberg_mode_ = true;
  HessenbergForm hg = hessenberg_reduce(g, counter);
  SchurForm sr = real_schur(r, counter);
  f.ug_ = std::move(hg.u);
  f.tg_ = std::move(hg.h);
  f.ur_ = std::move(sr.u);
  f.tr_ = std::move(sr.t);
  return f;
}

DenseMatrix SylvesterFactorization::solve(const DenseMatrix& q, FlopCounter& counter) const {
  if (q.rows() != n() || q.cols() != m()) {
    throw ShapeError("SylvesterFactorization::solve: Q must be n x m");
  }
  const DenseMatrix f = matmul(matmul(ug_.transposed(), q, counter), ur_, counter);
  DenseMatrix y;
  if (!hessenberg_mode_) {
    y = solve_quasi_triangular_sylvester(tg_, tr_, f, counter);
  } else {
    const std::size_t nn = n(), mm = m();
    DenseMatrix w = f;
    y = DenseMatrix(nn, mm);
    std::size_t j = 0;
    while (j < mm) {
      const std::size_t bj = (j + 1 < mm && tr_(j + 1, j) != 0.0) ? 2 : 1;
      if (bj == 1) {
        std::vector<double> col(nn);
        for (std::size_t i = 0; i < nn; ++i) col[i] = w(i, j);
        col = hessenberg_shifted_solve(tg_, tr_(j, j), std::move(col), counter);
        for (std::size_t i = 0; i < nn; ++i) y(i, j) = col[i];
      } else {
        std::vector<double> c1(nn), c2(nn);
        for (std::size_t i = 0; i < nn; ++i) {
          c1[i] = w(i, j);
          c2[i] = w(i, j + 1);
        }
        hessenberg_coupled_solve(tg_, tr_(j, j), tr_(j, j + 1), tr_(j + 1, j),
                                 tr_(j + 1, j + 1), c1, c2, counter);
        for (std::size_t i = 0; i < nn; ++i) {
          y(i, j) = c1[i];
          y(i, j + 1) = c2[i];
        }
      }
      fold_block_into_remaining(y, tr_, j + bj, j, bj, w, counter);
      j += bj;
    }
  }
  return matmul(matmul(ug_, y, counter), ur_.transposed(), counter);
}

double relative_residual(const SylvesterProblem& p, const DenseMatrix& x) {
  const DenseMatrix lhs = add(matmul(p.g, x), matmul(x, p.r));
  const double num = sub(lhs, p.q).frobenius_norm();
  const double den = std::max(p.q.frobenius_norm(), std::numeric_limits<double>::epsilon());
  return num / den;
}

namespace {

SylvesterSolution run_factored(const SylvesterProblem& p, bool hessenberg_mode) {
  const auto t0 = Clock::now();
  FlopCounter fc;
  const SylvesterFactorization fact =
      hessenberg_mode ? SylvesterFactorization::hessenberg_schur(p.g, p.r, fc)
                      : SylvesterFactorization::bartels_stewart(p.g, p.r, fc);
  DenseMatrix x = fact.solve(p.q, fc);

  SylvesterSolution out{std::move(x), {}};
  out.report.method = hessenberg_mode ? "hessenberg-schur" : "bartels-stewart";
  out.report.counted_multiplications = fc.multiplications;
  out.report.model_multiplications = flop_model(out.report.method, p.n(), p.m());
  out.report.relative_residual = relative_residual(p, out.x);
  out.report.wall_time_seconds = seconds_since(t0);
  return out;
}

}  // namespace

SylvesterSolution solve_bartels_stewart(const SylvesterProblem& p) {
  return run_factored(p, false);
}

SylvesterSolution solve_hessenberg_schur(const SylvesterProblem& p) {
  return run_factored(p, true);
}

SylvesterSolution solve_kronecker_baseline(const SylvesterProblem& p,
                                           std::size_t max_unknowns) {
  const std::size_t unknowns = p.n() * p.m();
  if (unknowns > max_unknowns) {
    throw ParameterError("solve_kronecker_baseline: " + std::to_string(unknowns) +
                         " unknowns exceed the cap of " + std::to_string(max_unknowns));
  }
  const auto t0 = Clock::now();
  FlopCounter fc;
  const DenseMatrix assembled =
      add(kron(DenseMatrix::identity(p.m()), p.g, fc),
          kron(p.r.transposed(), DenseMatrix::identity(p.n()), fc));
  DenseMatrix x;
  try {
    x = unstack(lu_solve(assembled, vec_stack(p.q), fc), p.n(), p.m());
  } catch (const SingularMatrixError& e) {
    throw NoUniqueSolutionError(std::string("kronecker baseline: assembled system singular (") +
                                e.what() + ")");
  }

  SylvesterSolution out{std::move(x), {}};
  out.report.method = "kronecker-gauss";
  out.report.counted_multiplications = fc.multiplications;
  out.report.model_multiplications = flop_model("kronecker-gauss", p.n(), p.m());
  out.report.relative_residual = relative_residual(p, out.x);
  out.report.wall_time_seconds = seconds_since(t0);
  return out;
}

double flop_model(std::string_view method, std::size_t n_in, std::size_t m_in) {
  if (n_in < 1 || m_in < 1) {
    throw ParameterError("flop_model: n and m must be >= 1");
  }
  const double n = static_cast<double>(n_in);
  const double m = static_cast<double>(m_in);
  if (method == "r-thr") {
    return n * n * n + (4.0 / 3.0) * m * m * m + 7.0 * n * n * m + 5.0 * n * m * m + n * n;
  }
  if (method == "kronecker-gauss") {
    const double nm = n * m;
    return nm * nm * nm / 3.0;
  }
  if (method == "bartels-stewart") {
    // Calibration curve for the instrumented implementation (fit over random
    // dense problems, n = m in 8..32; see test_sylvester.cpp).
    return 16.0 * (n * n * n + m * m * m) + 3.0 * (n * n * m + n * m * m);
  }
  if (method == "hessenberg-schur") {
    return 3.4 * n * n * n + 16.0 * m * m * m + 3.0 * (n * n * m + n * m * m);
  }
  if (method == "centro-split") {
    // Two half-size solves of the fastest reduction model.
    return 2.0 * (std::pow(n / 2.0, 3) + (4.0 / 3.0) * std::pow(m / 2.0, 3) +
                  7.0 * (n / 2.0) * (n / 2.0) * (m / 2.0) +
                  5.0 * (n / 2.0) * (m / 2.0) * (m / 2.0) + (n / 2.0) * (n / 2.0));
  }
  throw ParameterError("flop_model: unknown method tag '" + std::string(method) + "'");
}

}  // namespace dq
