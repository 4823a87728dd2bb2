#include "dftbasis/simd/kernels.hpp"

#include <algorithm>

namespace dftbasis::simd {
namespace scalar {

// std::complex operator* carries inf/nan recovery branches; the kernels work
// on finite unit-scale data, so the products are spelled out.

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
          std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const double ar = a[i * k + l].real();
      const double ai = a[i * k + l].imag();
      const cplx* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real();
        const double bi = brow[j].imag();
        crow[j] = {crow[j].real() + ar * br - ai * bi,
                   crow[j].imag() + ar * bi + ai * br};
      }
    }
  }
}

void gemv(const cplx* a, const cplx* x, cplx* y, std::size_t m,
          std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double re = 0.0;
    double im = 0.0;
    const cplx* row = a + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      re += row[j].real() * x[j].real() - row[j].imag() * x[j].imag();
      im += row[j].real() * x[j].imag() + row[j].imag() * x[j].real();
    }
    y[i] = {re, im};
  }
}

cplx dotc(const cplx* u, const cplx* v, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += u[i].real() * v[i].real() + u[i].imag() * v[i].imag();
    im += u[i].real() * v[i].imag() - u[i].imag() * v[i].real();
  }
  return {re, im};
}

double diff_norm_sq(const cplx* u, const cplx* v, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = u[i].real() - v[i].real();
    const double di = u[i].imag() - v[i].imag();
    acc += dr * dr + di * di;
  }
  return acc;
}

}  // namespace scalar

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &scalar::gemm, &scalar::gemv,
                                 &scalar::dotc, &scalar::diff_norm_sq};
  return table;
}

}  // namespace dftbasis::simd
