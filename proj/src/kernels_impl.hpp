#pragma once

#include <cstddef>

// Internal dispatch table shared by the kernel backends. Each backend
// translation unit defines one table; kernels.cpp owns detection and routing.

namespace dq::kernels::detail {

struct KernelTable {
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double, double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  void (*reflect3)(double, double, double, double*, double*, double*, std::size_t);
};

extern const KernelTable scalar_table;

#ifdef DQ_HAVE_AVX2
extern const KernelTable avx2_table;
#endif

#ifdef DQ_HAVE_NEON
extern const KernelTable neon_table;
#endif

}  // namespace dq::kernels::detail
