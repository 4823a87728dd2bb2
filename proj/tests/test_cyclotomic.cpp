#include <doctest.h>

#include <cmath>
#include <random>

#include "dftbasis/cyclotomic.hpp"
#include "dftbasis/error.hpp"

using namespace dftbasis;

namespace {

CVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

CMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = {g(rng), g(rng)};
  return m;
}

}  // namespace

TEST_CASE("root_power examples") {
  const PrimeContext ctx = make_context(5);
  const RootTable eta = RootTable::eta(ctx);
  const RootTable theta = RootTable::theta(ctx);
  CHECK(root_power(eta, 0) == cplx{1.0, 0.0});
  // theta = exp(2 pi i / 4) = i
  CHECK(std::abs(root_power(theta, 1) - cplx{0.0, 1.0}) < 1e-15);
  CHECK(root_power(eta, 7) == root_power(eta, 2));
  CHECK(root_power(eta, -3) == root_power(eta, 2));
  CHECK(root_power(eta, 5'000'000'000'002LL) == root_power(eta, 2));
}

TEST_CASE("root tables are on the unit circle and multiplicative") {
  for (std::int64_t order : {4, 5, 12, 13, 100, 101, 1008, 1009}) {
    CAPTURE(order);
    const RootTable t(order);
    double worst_norm = 0.0;
    double worst_law = 0.0;
    for (std::int64_t j = 0; j < order; ++j) {
      worst_norm = std::max(worst_norm, std::abs(std::abs(t.power(j)) - 1.0));
      const double angle = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(order);
      CHECK(std::abs(t.power(j) - std::polar(1.0, angle)) < 1e-14);
    }
    for (std::int64_t j = 0; j < order; j += 7) {
      for (std::int64_t m = 0; m < order; m += 11) {
        worst_law = std::max(worst_law, std::abs(t.power(j) * t.power(m) - t.power(j + m)));
      }
    }
    CHECK(worst_norm < 1e-14);
    CHECK(worst_law < 1e-14);
    CHECK(t.values()[0] == cplx{1.0, 0.0});
  }
}

TEST_CASE("gauss_sum examples") {
  const PrimeContext c5 = make_context(5);
  // Frozen from direct 5- and 13-term summation.
  CHECK(std::abs(gauss_sum(c5, 1) - cplx{2.2360679774997894, 0.0}) < 1e-14);
  CHECK(std::abs(gauss_sum(c5, 2) - cplx{-2.23606797749979, 0.0}) < 1e-14);
  CHECK(std::abs(gauss_sum(make_context(13), 1) - cplx{3.6055512754639887, 0.0}) < 1e-14);
  bool threw = false;
  try {
    gauss_sum(c5, 0);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::ZeroArgument;
  }
  CHECK(threw);
}

TEST_CASE("gauss sum law sigma(c) sqrt(p)") {
  for (Residue p : {5, 13, 17, 29, 37, 41, 101}) {
    const PrimeContext ctx = make_context(p);
    const double root_p = std::sqrt(static_cast<double>(p));
    for (Residue c = 1; c < p; ++c) {
      CHECK(std::abs(gauss_sum(ctx, c) - ctx.legendre(c) * root_p) < 1e-11);
    }
  }
}

TEST_CASE("inner_product examples") {
  const CVector d0 = CVector::basis(5, 0);
  const CVector d1 = CVector::basis(5, 1);
  CHECK(inner_product(d0, d0) == cplx{1.0, 0.0});
  CHECK(inner_product(d0, d1) == cplx{0.0, 0.0});

  std::mt19937_64 rng(7);
  CVector v = random_vector(13, rng);
  v *= 1.0 / norm2(v);
  CHECK(std::abs(inner_product(v, v) - 1.0) < 1e-14);

  // Conjugate-linear in the first slot.
  const CVector u = random_vector(13, rng);
  const cplx s{0.3, -1.7};
  CHECK(std::abs(inner_product(s * u, v) - std::conj(s) * inner_product(u, v)) < 1e-12);

  bool threw = false;
  try {
    inner_product(d0, CVector(4));
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::LengthMismatch;
  }
  CHECK(threw);
}

TEST_CASE("matrix-vector application is linear") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {5u, 13u, 29u}) {
    const CMatrix m = random_matrix(n, n, rng);
    for (int trial = 0; trial < 10; ++trial) {
      const CVector u = random_vector(n, rng);
      const CVector v = random_vector(n, rng);
      const cplx alpha{0.5, 2.0};
      const cplx beta{-1.25, 0.75};
      const CVector lhs = m * (alpha * u + beta * v);
      const CVector rhs = alpha * (m * u) + beta * (m * v);
      CHECK(distance(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("matrix helpers") {
  std::mt19937_64 rng(3);
  const CMatrix a = random_matrix(4, 6, rng);
  const CMatrix b = random_matrix(6, 3, rng);
  // (ab)^dagger = b^dagger a^dagger
  CHECK(frobenius_distance((a * b).adjoint(), b.adjoint() * a.adjoint()) < 1e-12);
  CHECK(unitarity_residual(CMatrix::identity(7)) == 0.0);
  CHECK(CMatrix::identity(5).trace() == cplx{5.0, 0.0});
  CHECK(frobenius_norm(CMatrix::identity(4)) == doctest::Approx(2.0));

  std::vector<CVector> cols = {CVector{1.0, 2.0}, CVector{3.0, 4.0}};
  const CMatrix m = CMatrix::from_columns(cols);
  CHECK(m(0, 1) == cplx{3.0, 0.0});
  CHECK(m.column(1) == cols[1]);

  bool threw = false;
  try {
    (void)(a * a);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::LengthMismatch;
  }
  CHECK(threw);
}
