#pragma once

// Dense complex<double> kernels used by every matrix product and residual in
// the library. Each kernel has a portable scalar reference and, on x86-64, an
// AVX2+FMA variant. The active table is picked once at startup from CPUID and
// can be pinned for equivalence testing.
//
// Storage is row-major and interleaved (re, im), i.e. std::complex<double>.

#include <complex>
#include <cstddef>
#include <string_view>

namespace dftbasis::simd {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;

  // c[m x n] = a[m x k] * b[k x n]
  void (*gemm)(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n);
  // y[m] = a[m x n] * x[n]
  void (*gemv)(const cplx* a, const cplx* x, cplx* y, std::size_t m,
               std::size_t n);
  // sum_i conj(u_i) * v_i
  cplx (*dotc)(const cplx* u, const cplx* v, std::size_t n);
  // sum_i |u_i - v_i|^2
  double (*diff_norm_sq)(const cplx* u, const cplx* v, std::size_t n);
};

enum class Backend { Scalar, Avx2 };

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

const KernelTable& active();

// Pins the active table. Returns false (and changes nothing) if the backend
// is unavailable on this machine.
bool select(Backend backend);

// Restores the CPUID-based choice.
void select_best();

}  // namespace dftbasis::simd
