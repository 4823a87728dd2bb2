#include "dftbasis/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dftbasis/error.hpp"
#include "dftbasis/simd/kernels.hpp"

namespace dftbasis {

RootTable::RootTable(std::int64_t order) : order_(order) {
  values_.resize(static_cast<std::size_t>(order));
  values_[0] = {1.0, 0.0};
  for (std::int64_t j = 1; j < order; ++j) {
    // Reflect into [0, pi] so cos/sin see the smaller argument.
    const bool upper = 2 * j > order;
    const std::int64_t jj = upper ? order - j : j;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(jj) /
                         static_cast<double>(order);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    values_[static_cast<std::size_t>(j)] = {c, upper ? -s : s};
  }
}

CVector CVector::basis(std::size_t n, std::size_t i) {
  CVector v(n);
  v[i] = 1.0;
  return v;
}

CVector& CVector::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::LengthMismatch, std::string(what) + ": lengths " +
                                               std::to_string(a) + " and " +
                                               std::to_string(b));
  }
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::LengthMismatch,
                std::string(what) + ": shapes " + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()) + " and " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

CVector& CVector::operator+=(const CVector& other) {
  require_same_length(size(), other.size(), "CVector +=");
  for (std::size_t i = 0; i < size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  require_same_length(size(), other.size(), "CVector -=");
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CVector operator*(cplx s, CVector v) { return v *= s; }
CVector operator+(CVector u, const CVector& v) { return u += v; }
CVector operator-(CVector u, const CVector& v) { return u -= v; }

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::from_columns(std::span<const CVector> columns) {
  if (columns.empty()) return {};
  CMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

CVector CMatrix::column(std::size_t c) const {
  CVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void CMatrix::set_column(std::size_t c, const CVector& v) {
  require_same_length(rows_, v.size(), "CMatrix::set_column");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

cplx CMatrix::trace() const {
  cplx t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "CMatrix +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "CMatrix -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_length(a.cols(), b.rows(), "matrix product");
  CMatrix c(a.rows(), b.cols());
  simd::active().gemm(a.data(), b.data(), c.data(), a.rows(), a.cols(),
                      b.cols());
  return c;
}

CVector operator*(const CMatrix& a, const CVector& v) {
  require_same_length(a.cols(), v.size(), "matrix-vector product");
  CVector y(a.rows());
  simd::active().gemv(a.data(), v.data(), y.data(), a.rows(), a.cols());
  return y;
}

CMatrix operator*(cplx s, CMatrix m) { return m *= s; }
CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }

cplx inner_product(const CVector& u, const CVector& v) {
  require_same_length(u.size(), v.size(), "inner_product");
  return simd::active().dotc(u.data(), v.data(), u.size());
}

double norm2(const CVector& v) {
  return std::sqrt(simd::active().dotc(v.data(), v.data(), v.size()).real());
}

double distance(const CVector& u, const CVector& v) {
  require_same_length(u.size(), v.size(), "distance");
  return std::sqrt(simd::active().diff_norm_sq(u.data(), v.data(), u.size()));
}

double frobenius_norm(const CMatrix& m) {
  const std::size_t n = m.rows() * m.cols();
  return std::sqrt(simd::active().dotc(m.data(), m.data(), n).real());
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  return std::sqrt(
      simd::active().diff_norm_sq(a.data(), b.data(), a.rows() * a.cols()));
}

double unitarity_residual(const CMatrix& m) {
  return frobenius_distance(m.adjoint() * m, CMatrix::identity(m.cols()));
}

cplx gauss_sum(const PrimeContext& ctx, Residue c) {
  const Residue cc = ctx.reduce(c);
  if (cc == 0) {
    throw Error(ErrorCode::ZeroArgument, "gauss_sum: c is 0 mod " +
                                             std::to_string(ctx.p()));
  }
  const RootTable eta = RootTable::eta(ctx);
  cplx sum{};
  for (Residue t = 0; t < ctx.p(); ++t) {
    sum += eta.power(ctx.mul(cc, t * t % ctx.p()));
  }
  return sum;
}

}  // namespace dftbasis
