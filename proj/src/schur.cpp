#include "dq/schur.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dq/errors.hpp"
#include "dq/kernels.hpp"

namespace dq {
namespace {

// Householder vector for x with the v(0) = 1 normalization; returns beta.
// P = I - beta v v^T maps x onto a multiple of e1.
double make_householder(std::vector<double>& x) {
  const std::size_t n = x.size();
  double sigma = 0.0;
  for (std::size_t i = 1; i < n; ++i) sigma += x[i] * x[i];
  const double x0 = x[0];
  x[0] = 1.0;
  if (sigma == 0.0) {
    return x0 >= 0.0 ? 0.0 : 2.0;  // x0 < 0: v = e1 flips the sign
  }
  const double mu = std::sqrt(x0 * x0 + sigma);
  const double v0 = (x0 <= 0.0) ? x0 - mu : -sigma / (x0 + mu);
  const double beta = 2.0 * v0 * v0 / (sigma + v0 * v0);
  for (std::size_t i = 1; i < n; ++i) x[i] /= v0;
  return beta;
}

// 3-element Householder with v = (1, v1, v2).
struct Reflector3 {
  double beta = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
};

Reflector3 make_householder3(double x, double y, double z) {
  const double sigma = y * y + z * z;
  if (sigma == 0.0) {
    return {x >= 0.0 ? 0.0 : 2.0, 0.0, 0.0};
  }
  const double mu = std::sqrt(x * x + sigma);
  const double v0 = (x <= 0.0) ? x - mu : -sigma / (x + mu);
  return {2.0 * v0 * v0 / (sigma + v0 * v0), y / v0, z / v0};
}

struct Reflector2 {
  double beta = 0.0;
  double v1 = 0.0;
};

Reflector2 make_householder2(double x, double y) {
  const double sigma = y * y;
  if (sigma == 0.0) {
    return {x >= 0.0 ? 0.0 : 2.0, 0.0};
  }
  const double mu = std::sqrt(x * x + sigma);
  const double v0 = (x <= 0.0) ? x - mu : -sigma / (x + mu);
  return {2.0 * v0 * v0 / (sigma + v0 * v0), y / v0};
}

// Rows r0, r1 <- P [r0; r1] with P = I - beta v v^T, v = (1, v1).
void reflect2_rows(double beta, double v1, double* r0, double* r1, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const double s = r0[j] + v1 * r1[j];
    const double t = beta * s;
    r0[j] -= t;
    r1[j] -= t * v1;
  }
}

// Columns c..c+2 of rows 0..last of m <- (those columns) * P.
void reflect3_cols(DenseMatrix& m, const Reflector3& p, std::size_t c, std::size_t last) {
  for (std::size_t i = 0; i <= last; ++i) {
    double* row = m.row_data(i) + c;
    const double s = row[0] + p.v1 * row[1] + p.v2 * row[2];
    const double t = p.beta * s;
    row[0] -= t;
    row[1] -= t * p.v1;
    row[2] -= t * p.v2;
  }
}

void reflect2_cols(DenseMatrix& m, const Reflector2& p, std::size_t c, std::size_t last) {
  for (std::size_t i = 0; i <= last; ++i) {
    double* row = m.row_data(i) + c;
    const double s = row[0] + p.v1 * row[1];
    const double t = p.beta * s;
    row[0] -= t;
    row[1] -= t * p.v1;
  }
}

// One Francis double-shift sweep on the active window [lo, hi] (hi - lo >= 2),
// chasing the bulge down the subdiagonal. Transforms are applied to the full
// rows/columns of h and accumulated into u.
void francis_sweep(DenseMatrix& h, DenseMatrix& u, std::size_t lo, std::size_t hi,
                   bool exceptional, FlopCounter& fc) {
  const std::size_t n = h.rows();
  double s, t;
  if (exceptional) {
    const double w = std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2));
    s = 1.5 * w;
    t = w * w;
  } else {
    s = h(hi - 1, hi - 1) + h(hi, hi);
    t = h(hi - 1, hi - 1) * h(hi, hi) - h(hi - 1, hi) * h(hi, hi - 1);
  }

  // First column of (H - s1 I)(H - s2 I), three nonzero entries.
  double x = h(lo, lo) * h(lo, lo) + h(lo, lo + 1) * h(lo + 1, lo) - s * h(lo, lo) + t;
  double y = h(lo + 1, lo) * (h(lo, lo) + h(lo + 1, lo + 1) - s);
  double z = h(lo + 1, lo) * h(lo + 2, lo + 1);
  fc.add(10);

  for (std::size_t k = lo; k + 2 <= hi; ++k) {
    if (k > lo) {
      x = h(k, k - 1);
      y = h(k + 1, k - 1);
      z = (k + 2 <= hi) ? h(k + 2, k - 1) : 0.0;
    }
    const Reflector3 p = make_householder3(x, y, z);
    fc.add(8);
    if (p.beta == 0.0) continue;

    const std::size_t c0 = (k == lo) ? lo : k - 1;
    kernels::reflect3(p.beta, p.v1, p.v2, h.row_data(k) + c0, h.row_data(k + 1) + c0,
                      h.row_data(k + 2) + c0, n - c0);
    if (k > lo) {
      h(k + 1, k - 1) = 0.0;
      h(k + 2, k - 1) = 0.0;
    }
    const std::size_t last = std::min(k + 3, hi);
    reflect3_cols(h, p, k, last);
    reflect3_cols(u, p, k, n - 1);
    fc.add(5 * ((n - c0) + (last + 1) + n));
  }

  // Final 2-element reflector clears the last bulge entry.
  const std::size_t k = hi - 1;
  const Reflector2 p = make_householder2(h(k, k - 1), h(hi, k - 1));
  fc.add(6);
  if (p.beta != 0.0) {
    reflect2_rows(p.beta, p.v1, h.row_data(k) + (k - 1), h.row_data(hi) + (k - 1), n - k + 1);
    h(hi, k - 1) = 0.0;
    reflect2_cols(h, p, k, hi);
    reflect2_cols(u, p, k, n - 1);
    fc.add(3 * ((n - k + 1) + (hi + 1) + n));
  }
}

// An isolated 2x2 diagonal block at (p, p+1): if its eigenvalues are real,
// rotate it to upper-triangular form; otherwise leave the complex pair.
void settle_2x2_block(DenseMatrix& h, DenseMatrix& u, std::size_t p, FlopCounter& fc) {
  const std::size_t n = h.rows();
  const double a = h(p, p), b = h(p, p + 1);
  const double c = h(p + 1, p), d = h(p + 1, p + 1);
  if (c == 0.0) return;
  const double mid = 0.5 * (a + d);
  const double half_gap = 0.5 * (a - d);
  const double disc = half_gap * half_gap + b * c;
  fc.add(4);
  if (disc < 0.0) return;  // complex-conjugate pair stays as a block

  const double sq = std::sqrt(disc);
  const double lambda = (mid >= 0.0) ? mid + sq : mid - sq;
  // Eigenvector of the block for lambda; (lambda - d, c) is nonzero since
  // c != 0, but prefer the better-scaled candidate.
  double v0 = b, v1 = lambda - a;
  const double w0 = lambda - d, w1 = c;
  if (std::hypot(w0, w1) > std::hypot(v0, v1)) {
    v0 = w0;
    v1 = w1;
  }
  const double r = std::hypot(v0, v1);
  const double cs = v0 / r, sn = v1 / r;

  double* row_p = h.row_data(p);
  double* row_q = h.row_data(p + 1);
  for (std::size_t j = p; j < n; ++j) {
    const double t0 = cs * row_p[j] + sn * row_q[j];
    const double t1 = -sn * row_p[j] + cs * row_q[j];
    row_p[j] = t0;
    row_q[j] = t1;
  }
  for (std::size_t i = 0; i <= p + 1; ++i) {
    const double t0 = cs * h(i, p) + sn * h(i, p + 1);
    const double t1 = -sn * h(i, p) + cs * h(i, p + 1);
    h(i, p) = t0;
    h(i, p + 1) = t1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double t0 = cs * u(i, p) + sn * u(i, p + 1);
    const double t1 = -sn * u(i, p) + cs * u(i, p + 1);
    u(i, p) = t0;
    u(i, p + 1) = t1;
  }
  h(p + 1, p) = 0.0;
  fc.add(4 * ((n - p) + (p + 2) + n) + 8);
}

}  // namespace

HessenbergForm hessenberg_reduce(const DenseMatrix& a, FlopCounter& counter) {
  if (!a.is_square()) {
    throw ShapeError("hessenberg_reduce: matrix must be square");
  }
  const std::size_t n = a.rows();
  DenseMatrix h = a;
  DenseMatrix u = DenseMatrix::identity(n);
  if (n < 3) {
    return {u, h};
  }

  std::vector<double> v, w;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;  // rows k+1..n-1
    v.resize(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = h(k + 1 + i, k);
    const double beta = make_householder(v);
    counter.add(2 * len + 4);
    if (beta != 0.0) {
      // Left: H(k+1:, k:) -= beta v (v^T H(k+1:, k:)).
      const std::size_t width = n - k;
      w.assign(width, 0.0);
      for (std::size_t i = 0; i < len; ++i) {
        kernels::axpy(v[i], h.row_data(k + 1 + i) + k, w.data(), width);
      }
      for (std::size_t i = 0; i < len; ++i) {
        kernels::axpy(-beta * v[i], w.data(), h.row_data(k + 1 + i) + k, width);
      }
      counter.add(2 * len * width + len);

      // Right: H(:, k+1:) -= (H(:, k+1:) v) beta v^T, same for U.
      for (std::size_t r = 0; r < n; ++r) {
        double* row = h.row_data(r) + k + 1;
        const double sc = kernels::dot(row, v.data(), len);
        kernels::axpy(-beta * sc, v.data(), row, len);
      }
      for (std::size_t r = 0; r < n; ++r) {
        double* row = u.row_data(r) + k + 1;
        const double sc = kernels::dot(row, v.data(), len);
        kernels::axpy(-beta * sc, v.data(), row, len);
      }
      counter.add(2 * n * (2 * len + 1));
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
  return {u, h};
}

SchurForm real_schur(const DenseMatrix& a, std::size_t max_iter, double tol,
                     FlopCounter& counter) {
  if (!a.is_square()) {
    throw ShapeError("real_schur: matrix must be square");
  }
  const std::size_t n = a.rows();
  if (n == 0) {
    return {DenseMatrix(0, 0), DenseMatrix(0, 0), 0};
  }

  auto [u, h] = hessenberg_reduce(a, counter);
  const double hnorm = h.frobenius_norm();

  std::size_t sweeps = 0;
  std::size_t stall = 0;
  std::size_t hi = n - 1;
  while (true) {
    // Deflate from the bottom: find the active window [lo, hi].
    std::size_t lo = hi;
    while (lo > 0) {
      double scale = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (scale == 0.0) scale = hnorm > 0.0 ? hnorm : 1.0;
      if (std::abs(h(lo, lo - 1)) <= tol * scale) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }

    if (lo == hi) {
      if (hi == 0) break;
      --hi;
      stall = 0;
      continue;
    }
    if (lo + 1 == hi) {
      settle_2x2_block(h, u, lo, counter);
      if (lo == 0) break;
      hi = lo - 1;
      stall = 0;
      continue;
    }

    if (sweeps >= max_iter) {
      throw ConvergenceError("real_schur: QR iteration did not converge (subdiagonal index " +
                             std::to_string(hi) + " after " + std::to_string(sweeps) +
                             " sweeps)");
    }
    const bool exceptional = stall > 0 && stall % 10 == 0;
    francis_sweep(h, u, lo, hi, exceptional, counter);
    ++sweeps;
    ++stall;
  }

  return {u, h, n};
}

SchurForm real_schur(const DenseMatrix& a) {
  FlopCounter scratch;
  return real_schur(a, scratch);
}

SchurForm real_schur(const DenseMatrix& a, FlopCounter& counter) {
  return real_schur(a, 30 * std::max<std::size_t>(a.rows(), 1), 1e-14, counter);
}

std::vector<std::complex<double>> schur_eigenvalues(const DenseMatrix& t) {
  std::vector<std::complex<double>> eig;
  const std::size_t n = t.rows();
  std::size_t i = 0;
  while (i < n) {
    if (i + 1 < n && t(i + 1, i) != 0.0) {
      const double mid = 0.5 * (t(i, i) + t(i + 1, i + 1));
      const double half_gap = 0.5 * (t(i, i) - t(i + 1, i + 1));
      const double disc = half_gap * half_gap + t(i, i + 1) * t(i + 1, i);
      if (disc < 0.0) {
        const double im = std::sqrt(-disc);
        eig.emplace_back(mid, im);
        eig.emplace_back(mid, -im);
      } else {
        const double sq = std::sqrt(disc);
        eig.emplace_back(mid + sq, 0.0);
        eig.emplace_back(mid - sq, 0.0);
      }
      i += 2;
    } else {
      eig.emplace_back(t(i, i), 0.0);
      i += 1;
    }
  }
  return eig;
}

}  // namespace dq
