#include <atomic>

#include "dftbasis/simd/kernels.hpp"

namespace dftbasis::simd {

#if defined(DFTBASIS_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(DFTBASIS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* best() {
  if (const KernelTable* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{best()};
  return table;
}

}  // namespace

const KernelTable* avx2_kernels() {
#if defined(DFTBASIS_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool select(Backend backend) {
  const KernelTable* table =
      backend == Backend::Avx2 ? avx2_kernels() : &scalar_kernels();
  if (table == nullptr) return false;
  current().store(table, std::memory_order_release);
  return true;
}

void select_best() { current().store(best(), std::memory_order_release); }

}  // namespace dftbasis::simd
