#if defined(__aarch64__)

#include <arm_neon.h>

#include "kernels_impl.hpp"

// NEON variants (2-wide float64). Like the AVX2 TU: explicit mul/add, no
// fused ops, scalar tail.

namespace dq::kernels::detail {
namespace {

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vx = vld1q_f64(x + i);
    const float64x2_t vy = vld1q_f64(y + i);
    vst1q_f64(y + i, vaddq_f64(vy, vmulq_f64(va, vx)));
  }
  for (; i < n; ++i) {
    y[i] += a * x[i];
  }
}

void scale_neon(double a, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vmulq_f64(vld1q_f64(y + i), va));
  }
  for (; i < n; ++i) {
    y[i] *= a;
  }
}

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) {
    s += x[i] * y[i];
  }
  return s;
}

void reflect3_neon(double beta, double v1, double v2, double* r0, double* r1, double* r2,
                   std::size_t n) {
  const float64x2_t vb = vdupq_n_f64(beta);
  const float64x2_t vv1 = vdupq_n_f64(v1);
  const float64x2_t vv2 = vdupq_n_f64(v2);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t a0 = vld1q_f64(r0 + i);
    const float64x2_t a1 = vld1q_f64(r1 + i);
    const float64x2_t a2 = vld1q_f64(r2 + i);
    const float64x2_t s = vaddq_f64(vaddq_f64(a0, vmulq_f64(vv1, a1)), vmulq_f64(vv2, a2));
    const float64x2_t t = vmulq_f64(vb, s);
    vst1q_f64(r0 + i, vsubq_f64(a0, t));
    vst1q_f64(r1 + i, vsubq_f64(a1, vmulq_f64(t, vv1)));
    vst1q_f64(r2 + i, vsubq_f64(a2, vmulq_f64(t, vv2)));
  }
  for (; i < n; ++i) {
    const double s = r0[i] + v1 * r1[i] + v2 * r2[i];
    const double t = beta * s;
    r0[i] -= t;
    r1[i] -= t * v1;
    r2[i] -= t * v2;
  }
}

}  // namespace

const KernelTable neon_table = {axpy_neon, scale_neon, dot_neon, reflect3_neon};

}  // namespace dq::kernels::detail

#endif  // __aarch64__
