#pragma once

// Closed-form eigenbases: psi_x diagonalizes the scale operator rho(g_a), and
// phi_x is the common eigenbasis of the DFT and the torus T_w. Theta_p (the
// discrete oscillator transform) has phi_x as column x.

#include <vector>

#include "dftbasis/arith.hpp"
#include "dftbasis/cyclotomic.hpp"

namespace dftbasis {

// psi_0 = delta_0; psi_x(i) = theta^(x log_a i) / sqrt(p-1) for i != 0.
// Throws Error{IndexOutOfRange} unless 0 <= x < p.
CVector psi_vector(const PrimeContext& ctx, Residue x);

// Eigenvalue of rho(g_a) on psi_x: theta^((p-1)/2 - x).
cplx psi_rho_ga_eigenvalue(const PrimeContext& ctx, Residue x);

// x = 0:  eta^(2^-1 a^k i^2) / sqrt(p)
// x > 0:  sum_{j=1}^{p-1} theta^(x log_a j) eta^(a^k (j-i)^2 - 2^-1 a^k i^2)
//         / sqrt(p (p-1))
CVector phi_vector(const PrimeContext& ctx, Residue x);

// (-i)^(x mod 4), exact.
cplx dft_eigenvalue(Residue x);
// Range-checked against p. Throws Error{IndexOutOfRange}.
cplx dft_eigenvalue(const PrimeContext& ctx, Residue x);

// Eigenvalue of rho(t), t = torus_generator(ctx), on phi_x:
// theta^((p-1)/2 - x) = -theta^(-x).
cplx torus_eigenvalue(const PrimeContext& ctx, Residue x);

struct EigenvectorRecord {
  Residue x = 0;
  CVector vector;
  cplx dft_eigenvalue;
  cplx torus_eigenvalue;
};

class OscillatorBasis {
 public:
  OscillatorBasis(Residue p, Residue generator, std::vector<EigenvectorRecord> records,
                  CMatrix transform)
      : p_(p), generator_(generator), records_(std::move(records)),
        transform_(std::move(transform)) {}

  Residue p() const { return p_; }
  Residue generator() const { return generator_; }
  const std::vector<EigenvectorRecord>& records() const { return records_; }
  const EigenvectorRecord& record(Residue x) const {
    return records_[static_cast<std::size_t>(x)];
  }
  // Theta_p: column x is phi_x.
  const CMatrix& transform() const { return transform_; }
  // diag((-i)^x)
  std::vector<cplx> dft_spectrum() const;

 private:
  Residue p_;
  Residue generator_;
  std::vector<EigenvectorRecord> records_;
  CMatrix transform_;
};

// All p vectors at once; the inner sums over j form one dense product.
OscillatorBasis build_basis(const PrimeContext& ctx);

// Theta_p^dagger v: the coefficients <phi_x, v>. Throws Error{LengthMismatch}.
CVector oscillator_transform(const OscillatorBasis& basis, const CVector& v);

// Theta_p c, the inverse of oscillator_transform.
CVector oscillator_synthesis(const OscillatorBasis& basis, const CVector& coeffs);

}  // namespace dftbasis
