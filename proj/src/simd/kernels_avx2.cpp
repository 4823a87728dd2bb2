// Compiled with -mavx2 -mfma. Nothing in here may run before the dispatcher
// has confirmed CPU support.

#include "dftbasis/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace dftbasis::simd {
namespace avx2 {
namespace {

constexpr int kVecs = 3;                        // ymm registers per row
constexpr std::size_t kPanel = 2 * kVecs;       // complex columns per panel
constexpr std::size_t kDepth = 192;             // k-block; panel stays in L1
constexpr std::size_t kRowBlock = 64;           // m-block; A block stays in L2

// Packs b[l0:l0+depth, j0:j0+kPanel] row by row. Columns past n are zero.
void pack_panel(const cplx* b, std::size_t n, std::size_t l0,
                std::size_t depth, std::size_t j0, double* packed) {
  const std::size_t width = std::min(kPanel, n - j0);
  for (std::size_t l = 0; l < depth; ++l) {
    const cplx* src = b + (l0 + l) * n + j0;
    double* dst = packed + l * 2 * kPanel;
    for (std::size_t j = 0; j < kPanel; ++j) {
      const cplx v = j < width ? src[j] : cplx{};
      dst[2 * j] = v.real();
      dst[2 * j + 1] = v.imag();
    }
  }
}

// c[Rows x kPanel] += a[Rows x depth] * panel.
//
// With b = (br, bi) per lane pair, re_acc collects ar*(br, bi) and im_acc
// collects ai*(br, bi). The product's real part is ar*br - ai*bi and its
// imaginary part ar*bi + ai*br, which is addsub(re_acc, swap(im_acc)); the
// swap and addsub happen once per tile instead of once per term.
template <int Rows>
void micro_kernel(const cplx* a, std::size_t lda, const double* packed,
                  std::size_t depth, cplx* c, std::size_t ldc,
                  std::size_t width) {
  __m256d re_acc[Rows][kVecs];
  __m256d im_acc[Rows][kVecs];
  #pragma GCC unroll 4
  for (int r = 0; r < Rows; ++r) {
    #pragma GCC unroll 4
    for (int v = 0; v < kVecs; ++v) {
      re_acc[r][v] = _mm256_setzero_pd();
      im_acc[r][v] = _mm256_setzero_pd();
    }
  }
  for (std::size_t l = 0; l < depth; ++l) {
    __m256d bv[kVecs];
    #pragma GCC unroll 4
    for (int v = 0; v < kVecs; ++v) {
      bv[v] = _mm256_load_pd(packed + l * 2 * kPanel + 4 * v);
    }
    #pragma GCC unroll 4
    for (int r = 0; r < Rows; ++r) {
      const double* av = reinterpret_cast<const double*>(a + r * lda + l);
      const __m256d ar = _mm256_broadcast_sd(av);
      const __m256d ai = _mm256_broadcast_sd(av + 1);
      #pragma GCC unroll 4
      for (int v = 0; v < kVecs; ++v) {
        re_acc[r][v] = _mm256_fmadd_pd(ar, bv[v], re_acc[r][v]);
        im_acc[r][v] = _mm256_fmadd_pd(ai, bv[v], im_acc[r][v]);
      }
    }
  }
  alignas(32) double buf[2 * kPanel];
  #pragma GCC unroll 4
  for (int r = 0; r < Rows; ++r) {
    #pragma GCC unroll 4
    for (int v = 0; v < kVecs; ++v) {
      const __m256d swapped = _mm256_permute_pd(im_acc[r][v], 0b0101);
      _mm256_store_pd(buf + 4 * v, _mm256_addsub_pd(re_acc[r][v], swapped));
    }
    cplx* dst = c + r * ldc;
    for (std::size_t j = 0; j < width; ++j) {
      dst[j] += cplx{buf[2 * j], buf[2 * j + 1]};
    }
  }
}

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Returns (sum re, sum im) of u_i * v_i, optionally conjugating u.
template <bool ConjugateU>
cplx dot_impl(const cplx* u, const cplx* v, std::size_t n) {
  // plain = sum u_re*v (lanes: ur*vr, ur*vi), cross = sum u_im*swap(v)
  // (lanes: ui*vi, ui*vr).
  __m256d plain = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  const double* ud = reinterpret_cast<const double*>(u);
  const double* vd = reinterpret_cast<const double*>(v);
  for (; i + 2 <= n; i += 2) {
    const __m256d uv = _mm256_loadu_pd(ud + 2 * i);
    const __m256d vv = _mm256_loadu_pd(vd + 2 * i);
    const __m256d ur = _mm256_movedup_pd(uv);
    const __m256d ui = _mm256_permute_pd(uv, 0b1111);
    const __m256d vs = _mm256_permute_pd(vv, 0b0101);
    plain = _mm256_fmadd_pd(ur, vv, plain);
    cross = _mm256_fmadd_pd(ui, vs, cross);
  }
  alignas(32) double p[4];
  alignas(32) double q[4];
  _mm256_store_pd(p, plain);
  _mm256_store_pd(q, cross);
  double re, im;
  if constexpr (ConjugateU) {
    re = p[0] + p[2] + q[0] + q[2];
    im = p[1] + p[3] - q[1] - q[3];
  } else {
    re = p[0] + p[2] - q[0] - q[2];
    im = p[1] + p[3] + q[1] + q[3];
  }
  for (; i < n; ++i) {
    const double ur = u[i].real();
    const double ui = ConjugateU ? -u[i].imag() : u[i].imag();
    re += ur * v[i].real() - ui * v[i].imag();
    im += ur * v[i].imag() + ui * v[i].real();
  }
  return {re, im};
}

}  // namespace

void gemm(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
          std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  if (m == 0 || n == 0 || k == 0) return;
  const std::size_t panels = (n + kPanel - 1) / kPanel;
  const std::size_t panel_stride = 2 * kDepth * kPanel;
  std::vector<double> storage(panels * panel_stride + 4);
  // 32-byte align the packed panels inside the buffer.
  double* packed = storage.data();
  while (reinterpret_cast<std::uintptr_t>(packed) % 32 != 0) ++packed;

  for (std::size_t l0 = 0; l0 < k; l0 += kDepth) {
    const std::size_t depth = std::min(kDepth, k - l0);
    for (std::size_t jp = 0; jp < panels; ++jp) {
      pack_panel(b, n, l0, depth, jp * kPanel, packed + jp * panel_stride);
    }
    for (std::size_t i0 = 0; i0 < m; i0 += kRowBlock) {
      const std::size_t i1 = std::min(m, i0 + kRowBlock);
      for (std::size_t jp = 0; jp < panels; ++jp) {
        const std::size_t j0 = jp * kPanel;
        const std::size_t width = std::min(kPanel, n - j0);
        const double* panel = packed + jp * panel_stride;
        std::size_t i = i0;
        for (; i + 2 <= i1; i += 2) {
          micro_kernel<2>(a + i * k + l0, k, panel, depth, c + i * n + j0, n,
                          width);
        }
        if (i < i1) {
          micro_kernel<1>(a + i * k + l0, k, panel, depth, c + i * n + j0, n,
                          width);
        }
      }
    }
  }
}

void gemv(const cplx* a, const cplx* x, cplx* y, std::size_t m,
          std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    y[i] = dot_impl<false>(a + i * n, x, n);
  }
}

cplx dotc(const cplx* u, const cplx* v, std::size_t n) {
  return dot_impl<true>(u, v, n);
}

double diff_norm_sq(const cplx* u, const cplx* v, std::size_t n) {
  const double* ud = reinterpret_cast<const double*>(u);
  const double* vd = reinterpret_cast<const double*>(v);
  const std::size_t len = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256d d0 =
        _mm256_sub_pd(_mm256_loadu_pd(ud + i), _mm256_loadu_pd(vd + i));
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(ud + i + 4),
                                     _mm256_loadu_pd(vd + i + 4));
    acc0 = _mm256_fmadd_pd(d0, d0, acc0);
    acc1 = _mm256_fmadd_pd(d1, d1, acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < len; ++i) {
    const double d = ud[i] - vd[i];
    acc += d * d;
  }
  return acc;
}

}  // namespace avx2

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", &avx2::gemm, &avx2::gemv,
                                 &avx2::dotc, &avx2::diff_norm_sq};
  return table;
}

}  // namespace dftbasis::simd
