#pragma once

// Brute-force oracles and the property suite. Nothing here reuses the closed
// forms from oscillator: eigen-relations are checked with matrix products and
// the DFT spectrum with polynomial projectors in F.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dftbasis/arith.hpp"
#include "dftbasis/cyclotomic.hpp"
#include "dftbasis/oscillator.hpp"

namespace dftbasis {

// Exponent e of the DFT eigenvalue (-i)^e.
enum class FourthRoot : int { One = 0, MinusI = 1, MinusOne = 2, I = 3 };

inline constexpr std::array<FourthRoot, 4> kFourthRoots = {
    FourthRoot::One, FourthRoot::MinusI, FourthRoot::MinusOne, FourthRoot::I};

cplx value(FourthRoot lambda);
std::string_view label(FourthRoot lambda);
// The class of (-i)^x.
FourthRoot fourth_root_of_index(Residue x);

struct SpectralProjectors {
  // Indexed by static_cast<int>(FourthRoot).
  std::array<CMatrix, 4> projectors;
  double order_four_residual = 0.0;  // ||F^4 - I||_F

  const CMatrix& operator[](FourthRoot lambda) const {
    return projectors[static_cast<std::size_t>(lambda)];
  }
};

// P_lambda = (1/4) sum_{k=0}^{3} lambda^(-k) F^k for all four lambda, sharing
// the powers of F. Throws Error{NotOrderFour} if ||F^4 - I||_F >= tol.
SpectralProjectors spectral_projectors(const CMatrix& f, double tol);

CMatrix spectral_projector(const CMatrix& f, FourthRoot lambda, double tol);

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Numeric check: pass iff residual < tolerance.
Check numeric_check(std::string name, double residual, double tolerance);
// Exact check: residual counts violations; pass iff it is 0.
Check exact_check(std::string name, std::uint64_t violations);

struct VerificationReport {
  Residue p = 0;
  Residue generator = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::size_t random_pairs = 0;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(std::string_view name) const;
};

// Projector-side confirmation of the DFT eigenvalues of a basis:
//   projector_eigen_residual  max_x ||P_{(-i)^x} phi_x - phi_x||_2 < tol
//   projector_trace_counts    max_lambda |tr P_lambda - #{x : (-i)^x = lambda}| < 1e-6
//   projector_rank_sum        sum_lambda round(tr P_lambda) == p
std::vector<Check> check_basis_against_projectors(const OscillatorBasis& basis,
                                                  const SpectralProjectors& proj,
                                                  double tol);

inline constexpr std::uint64_t kDefaultSeed = 20091117;

struct SuiteOptions {
  std::optional<double> tolerance;          // default 1e-12 * p
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> random_pairs;  // default: default_random_pairs(p)
};

double default_tolerance(Residue p);
// 100 up to p = 257; 16 beyond, where each pair costs O(p^3).
std::size_t default_random_pairs(Residue p);

// Every identity the construction rests on, as named checks. Failures are
// recorded, never thrown.
VerificationReport run_full_suite(const PrimeContext& ctx,
                                  const SuiteOptions& options = {});

}  // namespace dftbasis
