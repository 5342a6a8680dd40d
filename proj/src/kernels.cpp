#include "dq/kernels.hpp"

#include <atomic>
#include <string>

#include "dq/errors.hpp"
#include "kernels_impl.hpp"

namespace dq::kernels {
namespace {

using detail::KernelTable;

const KernelTable* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &detail::scalar_table;
    case Backend::avx2:
#ifdef DQ_HAVE_AVX2
      return &detail::avx2_table;
#else
      return nullptr;
#endif
    case Backend::neon:
#ifdef DQ_HAVE_NEON
      return &detail::neon_table;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

bool cpu_supports(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(DQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::neon:
#ifdef DQ_HAVE_NEON
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

Backend detect_best() {
  if (cpu_supports(Backend::avx2)) return Backend::avx2;
  if (cpu_supports(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

struct Dispatch {
  std::atomic<Backend> backend;
  std::atomic<const KernelTable*> table;

  Dispatch() {
    const Backend b = detect_best();
    backend.store(b, std::memory_order_relaxed);
    table.store(table_for(b), std::memory_order_relaxed);
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

const KernelTable& table() { return *dispatch().table.load(std::memory_order_relaxed); }

}  // namespace

Backend active_backend() { return dispatch().backend.load(std::memory_order_relaxed); }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) { return table_for(b) != nullptr && cpu_supports(b); }

void force_backend(Backend b) {
  if (!backend_available(b)) {
    throw ParameterError(std::string("kernel backend not available on this CPU: ") +
                         backend_name(b));
  }
  dispatch().backend.store(b, std::memory_order_relaxed);
  dispatch().table.store(table_for(b), std::memory_order_relaxed);
}

void axpy(double a, const double* x, double* y, std::size_t n) { table().axpy(a, x, y, n); }

void scale(double a, double* y, std::size_t n) { table().scale(a, y, n); }

double dot(const double* x, const double* y, std::size_t n) { return table().dot(x, y, n); }

void reflect3(double beta, double v1, double v2, double* r0, double* r1, double* r2,
              std::size_t n) {
  table().reflect3(beta, v1, v2, r0, r1, r2, n);
}

}  // namespace dq::kernels
