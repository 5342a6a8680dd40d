#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_impl.hpp"

// AVX2 variants, compiled as a separate TU with -mavx2. The elementwise
// kernels use explicit mul/add intrinsics (no FMA) and keep the scalar
// per-lane operation order, so they are bit-identical to the reference.

namespace dq::kernels::detail {
namespace {

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (; i < n; ++i) {
    y[i] += a * x[i];
  }
}

void scale_avx2(double a, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_mul_pd(_mm256_loadu_pd(y + i), va));
  }
  for (; i < n; ++i) {
    y[i] *= a;
  }
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    s += x[i] * y[i];
  }
  return s;
}

void reflect3_avx2(double beta, double v1, double v2, double* r0, double* r1, double* r2,
                   std::size_t n) {
  const __m256d vb = _mm256_set1_pd(beta);
  const __m256d vv1 = _mm256_set1_pd(v1);
  const __m256d vv2 = _mm256_set1_pd(v2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a0 = _mm256_loadu_pd(r0 + i);
    const __m256d a1 = _mm256_loadu_pd(r1 + i);
    const __m256d a2 = _mm256_loadu_pd(r2 + i);
    // s = r0 + v1*r1 + v2*r2, same association as the scalar kernel.
    const __m256d s =
        _mm256_add_pd(_mm256_add_pd(a0, _mm256_mul_pd(vv1, a1)), _mm256_mul_pd(vv2, a2));
    const __m256d t = _mm256_mul_pd(vb, s);
    _mm256_storeu_pd(r0 + i, _mm256_sub_pd(a0, t));
    _mm256_storeu_pd(r1 + i, _mm256_sub_pd(a1, _mm256_mul_pd(t, vv1)));
    _mm256_storeu_pd(r2 + i, _mm256_sub_pd(a2, _mm256_mul_pd(t, vv2)));
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

const KernelTable avx2_table = {axpy_avx2, scale_avx2, dot_avx2, reflect3_avx2};

}  // namespace dq::kernels::detail

#endif  // x86_64
