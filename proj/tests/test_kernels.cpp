#include <doctest.h>

#include <random>
#include <vector>

#include "dftbasis/simd/kernels.hpp"

using namespace dftbasis::simd;

namespace {

std::vector<cplx> random_block(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

// Textbook triple loop on std::complex, the reference both tables answer to.
std::vector<cplx> naive_gemm(const std::vector<cplx>& a, const std::vector<cplx>& b,
                             std::size_t m, std::size_t k, std::size_t n) {
  std::vector<cplx> c(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s{};
      for (std::size_t l = 0; l < k; ++l) s += a[i * k + l] * b[l * n + j];
      c[i * n + j] = s;
    }
  return c;
}

double max_abs_diff(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

std::vector<const KernelTable*> tables() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
  if (const KernelTable* t = avx2_kernels()) out.push_back(t);
  return out;
}

struct Shape {
  std::size_t m, k, n;
};

// Covers odd tails, single rows/columns, and k crossing the blocking depth.
const Shape kShapes[] = {{1, 1, 1},   {1, 5, 1},    {2, 3, 4},    {3, 7, 5},
                         {5, 5, 5},   {6, 6, 6},    {7, 13, 11},  {13, 13, 13},
                         {64, 65, 63}, {65, 200, 67}, {101, 101, 101}, {3, 400, 2}};

}  // namespace

TEST_CASE("gemm matches the naive reference on every table") {
  std::mt19937_64 rng(42);
  for (const KernelTable* t : tables()) {
    CAPTURE(t->name);
    for (const Shape& s : kShapes) {
      CAPTURE(s.m);
      CAPTURE(s.k);
      CAPTURE(s.n);
      const auto a = random_block(s.m * s.k, rng);
      const auto b = random_block(s.k * s.n, rng);
      std::vector<cplx> c(s.m * s.n, cplx{99.0, 99.0});  // must be overwritten
      t->gemm(a.data(), b.data(), c.data(), s.m, s.k, s.n);
      CHECK(max_abs_diff(c, naive_gemm(a, b, s.m, s.k, s.n)) <
            1e-13 * static_cast<double>(s.k));
    }
  }
}

TEST_CASE("gemv, dotc, diff_norm_sq match the reference") {
  std::mt19937_64 rng(5);
  for (const KernelTable* t : tables()) {
    CAPTURE(t->name);
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 8u, 13u, 101u, 1009u}) {
      CAPTURE(n);
      const auto u = random_block(n, rng);
      const auto v = random_block(n, rng);
      cplx dot{};
      double dn = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        dot += std::conj(u[i]) * v[i];
        dn += std::norm(u[i] - v[i]);
      }
      CHECK(std::abs(t->dotc(u.data(), v.data(), n) - dot) < 1e-12 * n);
      CHECK(std::abs(t->diff_norm_sq(u.data(), v.data(), n) - dn) < 1e-12 * n);

      const std::size_t m = n % 7 + 1;
      const auto a = random_block(m * n, rng);
      std::vector<cplx> y(m);
      t->gemv(a.data(), u.data(), y.data(), m, n);
      CHECK(max_abs_diff(y, naive_gemm(a, u, m, n, 1)) < 1e-12 * n);
    }
  }
}

TEST_CASE("scalar and avx2 tables agree") {
  const KernelTable* vec = avx2_kernels();
  if (vec == nullptr) {
    MESSAGE("AVX2 kernels unavailable on this machine; equivalence not exercised");
    return;
  }
  const KernelTable& ref = scalar_kernels();
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 90);
    const std::size_t m = dim(rng), k = dim(rng) * 3, n = dim(rng);
    const auto a = random_block(m * k, rng);
    const auto b = random_block(k * n, rng);
    std::vector<cplx> c1(m * n), c2(m * n);
    ref.gemm(a.data(), b.data(), c1.data(), m, k, n);
    vec->gemm(a.data(), b.data(), c2.data(), m, k, n);
    CHECK(max_abs_diff(c1, c2) < 1e-12 * static_cast<double>(k));

    std::vector<cplx> y1(m), y2(m);
    ref.gemv(a.data(), b.data(), y1.data(), m, k);
    vec->gemv(a.data(), b.data(), y2.data(), m, k);
    CHECK(max_abs_diff(y1, y2) < 1e-12 * static_cast<double>(k));

    CHECK(std::abs(ref.dotc(a.data(), a.data() + 1, k) - vec->dotc(a.data(), a.data() + 1, k)) <
          1e-11 * static_cast<double>(k));
    CHECK(std::abs(ref.diff_norm_sq(a.data(), a.data() + 1, k) -
                   vec->diff_norm_sq(a.data(), a.data() + 1, k)) <
          1e-11 * static_cast<double>(k));
  }
}

TEST_CASE("backend selection") {
  CHECK(select(Backend::Scalar));
  CHECK(active().name == "scalar");
  if (avx2_kernels() != nullptr) {
    CHECK(select(Backend::Avx2));
    CHECK(active().name == "avx2");
  } else {
    CHECK_FALSE(select(Backend::Avx2));
    CHECK(active().name == "scalar");
  }
  select_best();
  CHECK(&active() == (avx2_kernels() ? avx2_kernels() : &scalar_kernels()));
}
