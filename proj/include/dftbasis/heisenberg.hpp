#pragma once

// The finite Heisenberg group H = V x F_p and its Schrödinger-type
// representation pi with central character (0, 0, z) -> eta^z.

#include "dftbasis/arith.hpp"
#include "dftbasis/cyclotomic.hpp"

namespace dftbasis {

struct PlaneVector {
  Residue t = 0;
  Residue w = 0;
};

// Components are always reduced into {0, ..., p-1}; p travels with the
// element so products across different fields are caught.
struct HeisenbergElement {
  Residue p = 0;
  Residue t = 0;
  Residue w = 0;
  Residue z = 0;

  bool operator==(const HeisenbergElement&) const = default;
};

HeisenbergElement make_heisenberg(const PrimeContext& ctx, Residue t, Residue w,
                                  Residue z);

// omega((t1, w1), (t2, w2)) = t1 w2 - t2 w1 mod p
Residue symplectic_form(const PrimeContext& ctx, PlaneVector v1, PlaneVector v2);

// Throws Error{ContextMismatch} when the elements live over different primes.
HeisenbergElement heisenberg_mul(const PrimeContext& ctx,
                                 const HeisenbergElement& x,
                                 const HeisenbergElement& y);

HeisenbergElement heisenberg_inverse(const PrimeContext& ctx,
                                     const HeisenbergElement& x);

// out(i) = eta^(2^-1 t w + z + w i) v(i + t). Throws Error{LengthMismatch}.
CVector pi_apply(const PrimeContext& ctx, const HeisenbergElement& h,
                 const CVector& v);

// Dense form of pi_apply: column i is pi(h) delta_i.
CMatrix pi_matrix(const PrimeContext& ctx, const HeisenbergElement& h);

}  // namespace dftbasis
