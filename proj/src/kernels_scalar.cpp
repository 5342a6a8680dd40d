#include "kernels_impl.hpp"

// Reference kernels. Plain loops, one element at a time; the SIMD variants
// must match these (bitwise for the elementwise kernels).

namespace dq::kernels::detail {
namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += a * x[i];
  }
}

void scale_scalar(double a, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] *= a;
  }
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += x[i] * y[i];
  }
  return s;
}

void reflect3_scalar(double beta, double v1, double v2, double* r0, double* r1, double* r2,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double s = r0[i] + v1 * r1[i] + v2 * r2[i];
    const double t = beta * s;
    r0[i] -= t;
    r1[i] -= t * v1;
    r2[i] -= t * v2;
  }
}

}  // namespace

const KernelTable scalar_table = {axpy_scalar, scale_scalar, dot_scalar, reflect3_scalar};

}  // namespace dq::kernels::detail
