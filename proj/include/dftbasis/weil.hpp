#pragma once

// SL2(F_p), its action on the Heisenberg group, and the Weil representation
// rho assembled from the Bruhat factorization into scale, chirp and Fourier
// generators.

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "dftbasis/arith.hpp"
#include "dftbasis/cyclotomic.hpp"
#include "dftbasis/heisenberg.hpp"

namespace dftbasis {

// [[a, b], [c, d]] over F_p with ad - bc = 1.
struct SL2Element {
  Residue p = 0;
  Residue a = 1;
  Residue b = 0;
  Residue c = 0;
  Residue d = 1;

  bool operator==(const SL2Element&) const = default;
};

// Reduces the entries; throws Error{NotInSL2} if the determinant is not 1.
SL2Element make_sl2(const PrimeContext& ctx, Residue a, Residue b, Residue c,
                    Residue d);

SL2Element sl2_identity(const PrimeContext& ctx);
// w = [[0, 1], [-1, 0]]
SL2Element weyl_element(const PrimeContext& ctx);
// g_u = diag(u, u^-1). Throws Error{ZeroArgument}.
SL2Element scale_element(const PrimeContext& ctx, Residue u);
// g_b = [[1, 0], [b, 1]]
SL2Element chirp_element(const PrimeContext& ctx, Residue b);

// Both throw Error{ContextMismatch} for elements over another prime.
SL2Element sl2_mul(const PrimeContext& ctx, const SL2Element& g,
                   const SL2Element& h);
SL2Element sl2_inverse(const PrimeContext& ctx, const SL2Element& g);
SL2Element sl2_pow(const PrimeContext& ctx, const SL2Element& g, std::uint64_t e);
// Smallest n >= 1 with g^n = I (at most 2p for any element of SL2(F_p)).
std::uint64_t sl2_order(const PrimeContext& ctx, const SL2Element& g);

// g . (t, w, z) = (a t + b w, c t + d w, z)
HeisenbergElement sl2_act_on_h(const PrimeContext& ctx, const SL2Element& g,
                               const HeisenbergElement& h);

// Uniform (a, b, c) with a != 0, d solved from the determinant.
SL2Element random_sl2(const PrimeContext& ctx, std::mt19937_64& rng);

struct Scale {
  Residue u;
  bool operator==(const Scale&) const = default;
};
struct Chirp {
  Residue b;
  bool operator==(const Chirp&) const = default;
};
struct Fourier {
  bool operator==(const Fourier&) const = default;
};
using BruhatFactor = std::variant<Scale, Chirp, Fourier>;

// Factors in written order; the rightmost acts on vectors first.
struct BruhatFactorization {
  std::vector<BruhatFactor> factors;
  bool operator==(const BruhatFactorization&) const = default;
};

// b != 0: [Scale(b), Chirp(b d), Fourier, Chirp(a b^-1)]
// b == 0: [Scale(a), Chirp(a c)]
BruhatFactorization bruhat_decompose(const PrimeContext& ctx, const SL2Element& g);

SL2Element factor_element(const PrimeContext& ctx, const BruhatFactor& f);
// Product of the factors' SL2 forms; equals the decomposed element.
SL2Element reconstruct(const PrimeContext& ctx, const BruhatFactorization& f);

// S_u delta_i = sigma(u) delta_{u i}. Throws Error{ZeroArgument}.
CMatrix rho_scale(const PrimeContext& ctx, Residue u);
// N_b = diag(eta^(-2^-1 b i^2))
CMatrix rho_chirp(const PrimeContext& ctx, Residue b);
// The unitary DFT F, entry (j, i) = eta^(j i) / sqrt(p).
CMatrix rho_fourier(const PrimeContext& ctx);

// Scalar c with rho(w) = c F. Composing the scale/chirp generators with F
// itself only yields a projective representation: for p ≡ 5 (mod 8) some
// products pick up a factor -1. Taking c = sigma(2) removes the cocycle.
int weil_lift_sign(const PrimeContext& ctx);

// The Weil representation, multiplicative on SL2(F_p). Built in O(p^2) from
// the factorization; rho(w) = weil_lift_sign * F.
CMatrix rho_matrix(const PrimeContext& ctx, const SL2Element& g);

// The factor composition with the Fourier factor taken as F verbatim. Agrees
// with rho_matrix up to the sign weil_lift_sign when g.b != 0.
CMatrix projective_rho_matrix(const PrimeContext& ctx, const SL2Element& g);

// True iff g = [[alpha, -beta], [beta, alpha]] with alpha^2 + beta^2 = 1.
bool torus_membership(const PrimeContext& ctx, const SL2Element& g);

// s = [[1, 2^-1 a^k], [a^k, 2^-1]], conjugating the diagonal torus onto T_w.
SL2Element torus_conjugator(const PrimeContext& ctx);

// t = s g_a s^-1 by explicit multiplication; a generator of T_w.
SL2Element torus_generator(const PrimeContext& ctx);

}  // namespace dftbasis
