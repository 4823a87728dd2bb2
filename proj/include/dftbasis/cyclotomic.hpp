#pragma once

// Roots of unity with exact integer exponents, and the dense complex vector
// and matrix types that carry functions on F_p and operators on them.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dftbasis/arith.hpp"

namespace dftbasis {

using cplx = std::complex<double>;

// values[j] = exp(2 pi i j / order). Exponents are reduced in integers before
// lookup, so large products like x * log_a(j) never reach floating point.
class RootTable {
 public:
  explicit RootTable(std::int64_t order);

  // theta = exp(2 pi i / (p - 1))
  static RootTable theta(const PrimeContext& ctx) { return RootTable(ctx.p() - 1); }
  // eta = exp(2 pi i / p)
  static RootTable eta(const PrimeContext& ctx) { return RootTable(ctx.p()); }

  std::int64_t order() const { return order_; }
  std::span<const cplx> values() const { return values_; }

  cplx power(std::int64_t exponent) const {
    std::int64_t r = exponent % order_;
    if (r < 0) r += order_;
    return values_[static_cast<std::size_t>(r)];
  }

 private:
  std::int64_t order_;
  std::vector<cplx> values_;
};

inline cplx root_power(const RootTable& table, std::int64_t exponent) {
  return table.power(exponent);
}

class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t n) : data_(n) {}
  explicit CVector(std::vector<cplx> data) : data_(std::move(data)) {}
  CVector(std::initializer_list<cplx> init) : data_(init) {}

  // delta_i in C^n
  static CVector basis(std::size_t n, std::size_t i);

  std::size_t size() const { return data_.size(); }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  std::span<cplx> span() { return data_; }
  std::span<const cplx> span() const { return data_; }
  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  CVector& operator*=(cplx s);
  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);

  bool operator==(const CVector&) const = default;

 private:
  std::vector<cplx> data_;
};

CVector operator*(cplx s, CVector v);
CVector operator+(CVector u, const CVector& v);
CVector operator-(CVector u, const CVector& v);

// Row-major; entry (r, c) is output coordinate r, input coordinate c, so
// column c is the image of delta_c.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const cplx> d);
  // Column x is columns[x].
  static CMatrix from_columns(std::span<const CVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  std::span<const cplx> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  CVector column(std::size_t c) const;
  void set_column(std::size_t c, const CVector& v);

  CMatrix adjoint() const;
  cplx trace() const;

  CMatrix& operator*=(cplx s);
  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

// Dense products run on the active SIMD kernel table.
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, const CVector& v);
CMatrix operator*(cplx s, CMatrix m);
CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);

// Throws Error{LengthMismatch}.
cplx inner_product(const CVector& u, const CVector& v);
double norm2(const CVector& v);
// ||u - v||_2. Throws Error{LengthMismatch}.
double distance(const CVector& u, const CVector& v);

double frobenius_norm(const CMatrix& m);
// ||a - b||_F. Throws Error{LengthMismatch}.
double frobenius_distance(const CMatrix& a, const CMatrix& b);
// ||m^dagger m - I||_F
double unitarity_residual(const CMatrix& m);

// sum_{t in F_p} eta^(c t^2). Throws Error{ZeroArgument} for c ≡ 0.
cplx gauss_sum(const PrimeContext& ctx, Residue c);

}  // namespace dftbasis
