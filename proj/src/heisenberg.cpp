#include "dftbasis/heisenberg.hpp"

#include <string>

#include "dftbasis/error.hpp"

namespace dftbasis {

namespace {

void require_context(const PrimeContext& ctx, const HeisenbergElement& h) {
  if (h.p != ctx.p()) {
    throw Error(ErrorCode::ContextMismatch,
                "Heisenberg element over p=" + std::to_string(h.p) +
                    " used with context p=" + std::to_string(ctx.p()));
  }
}

// Exponent of the phase pi(h) puts on output coordinate i, before the z term.
Residue phase_offset(const PrimeContext& ctx, const HeisenbergElement& h) {
  return ctx.add(ctx.mul(ctx.half(), ctx.mul(h.t, h.w)), h.z);
}

}  // namespace

HeisenbergElement make_heisenberg(const PrimeContext& ctx, Residue t, Residue w,
                                  Residue z) {
  return {ctx.p(), ctx.reduce(t), ctx.reduce(w), ctx.reduce(z)};
}

Residue symplectic_form(const PrimeContext& ctx, PlaneVector v1, PlaneVector v2) {
  return ctx.sub(ctx.mul(v1.t, v2.w), ctx.mul(v2.t, v1.w));
}

HeisenbergElement heisenberg_mul(const PrimeContext& ctx,
                                 const HeisenbergElement& x,
                                 const HeisenbergElement& y) {
  require_context(ctx, x);
  require_context(ctx, y);
  const Residue omega = symplectic_form(ctx, {x.t, x.w}, {y.t, y.w});
  return {ctx.p(), ctx.add(x.t, y.t), ctx.add(x.w, y.w),
          ctx.add(ctx.add(x.z, y.z), ctx.mul(ctx.half(), omega))};
}

HeisenbergElement heisenberg_inverse(const PrimeContext& ctx,
                                     const HeisenbergElement& x) {
  require_context(ctx, x);
  // omega(v, -v) = 0, so the inverse is plain negation.
  return {ctx.p(), ctx.neg(x.t), ctx.neg(x.w), ctx.neg(x.z)};
}

CVector pi_apply(const PrimeContext& ctx, const HeisenbergElement& h,
                 const CVector& v) {
  require_context(ctx, h);
  const auto p = static_cast<std::size_t>(ctx.p());
  if (v.size() != p) {
    throw Error(ErrorCode::LengthMismatch,
                "pi_apply: vector length " + std::to_string(v.size()) +
                    " != p=" + std::to_string(p));
  }
  const RootTable eta = RootTable::eta(ctx);
  const Residue offset = phase_offset(ctx, h);
  CVector out(p);
  Residue src = h.t;
  Residue exponent = offset;
  for (std::size_t i = 0; i < p; ++i) {
    out[i] = eta.power(exponent) * v[static_cast<std::size_t>(src)];
    src = src + 1 == ctx.p() ? 0 : src + 1;
    exponent = ctx.add(exponent, h.w);
  }
  return out;
}

CMatrix pi_matrix(const PrimeContext& ctx, const HeisenbergElement& h) {
  require_context(ctx, h);
  const auto p = static_cast<std::size_t>(ctx.p());
  const RootTable eta = RootTable::eta(ctx);
  const Residue offset = phase_offset(ctx, h);
  // out(i) reads input coordinate i + t, so row i has one entry at column i+t.
  CMatrix m(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    const Residue ii = static_cast<Residue>(i);
    const auto col = static_cast<std::size_t>(ctx.add(ii, h.t));
    m(i, col) = eta.power(ctx.add(offset, ctx.mul(h.w, ii)));
  }
  return m;
}

}  // namespace dftbasis
