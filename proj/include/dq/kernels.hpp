#pragma once

#include <cstddef>

namespace dq::kernels {

/// Vector backends for the arithmetic inner loops. The scalar backend is the
/// reference implementation; avx2/neon are drop-in variants selected at
/// runtime from CPU capabilities.
enum class Backend { scalar, avx2, neon };

/// Backend the process is currently dispatching to. Detected once on first
/// use (best available wins).
Backend active_backend();

const char* backend_name(Backend b);

/// List of backends usable on this CPU (always contains scalar).
bool backend_available(Backend b);

/// Pin dispatch to one backend, e.g. to compare a SIMD variant against the
/// scalar reference. Throws ParameterError if unavailable on this CPU.
void force_backend(Backend b);

/// y[i] += a * x[i].
///
/// The SIMD variants keep the scalar per-element operation order (multiply
/// then add, no FMA contraction), so every backend produces bit-identical
/// results for this kernel. The same holds for scale() and reflect3().
void axpy(double a, const double* x, double* y, std::size_t n);

/// y[i] *= a.
void scale(double a, double* y, std::size_t n);

/// sum_i x[i] * y[i]. SIMD backends accumulate in independent lanes and fold
/// them in a fixed order; results can differ from the scalar reference in the
/// trailing bits (equivalence is tested to a tolerance, not bitwise).
double dot(const double* x, const double* y, std::size_t n);

/// Householder update of three rows with reflector v = (1, v1, v2)^T and
/// coefficient beta, applied from the left:
///   s     = r0[i] + v1 * r1[i] + v2 * r2[i]
///   r0[i] -= beta * s
///   r1[i] -= beta * s * v1
///   r2[i] -= beta * s * v2
/// Five multiplications per element.
void reflect3(double beta, double v1, double v2, double* r0, double* r1, double* r2,
              std::size_t n);

}  // namespace dq::kernels
