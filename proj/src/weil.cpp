#include "dftbasis/weil.hpp"

#include <cmath>
#include <string>

#include "dftbasis/error.hpp"

namespace dftbasis {

namespace {

void require_context(const PrimeContext& ctx, const SL2Element& g) {
  if (g.p != ctx.p()) {
    throw Error(ErrorCode::ContextMismatch,
                "SL2 element over p=" + std::to_string(g.p) +
                    " used with context p=" + std::to_string(ctx.p()));
  }
}

Residue determinant(const PrimeContext& ctx, const SL2Element& g) {
  return ctx.sub(ctx.mul(g.a, g.d), ctx.mul(g.b, g.c));
}

// In-place operator algebra used to assemble rho without dense products.
// Left factors act on rows, right factors on columns.

void left_scale(const PrimeContext& ctx, Residue u, CMatrix& m) {
  const auto p = static_cast<std::size_t>(ctx.p());
  const double sign = ctx.legendre(u);
  CMatrix out(p, m.cols());
  for (std::size_t i = 0; i < p; ++i) {
    const auto dst = static_cast<std::size_t>(ctx.mul(u, static_cast<Residue>(i)));
    for (std::size_t c = 0; c < m.cols(); ++c) out(dst, c) = sign * m(i, c);
  }
  m = std::move(out);
}

void right_scale(const PrimeContext& ctx, Residue u, CMatrix& m) {
  const auto p = static_cast<std::size_t>(ctx.p());
  const double sign = ctx.legendre(u);
  CMatrix out(m.rows(), p);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t i = 0; i < p; ++i) {
      const auto src = static_cast<std::size_t>(ctx.mul(u, static_cast<Residue>(i)));
      out(r, i) = sign * m(r, src);
    }
  }
  m = std::move(out);
}

std::vector<cplx> chirp_diagonal(const PrimeContext& ctx, const RootTable& eta,
                                 Residue b) {
  const Residue coeff = ctx.neg(ctx.mul(ctx.half(), b));
  std::vector<cplx> d(static_cast<std::size_t>(ctx.p()));
  for (Residue i = 0; i < ctx.p(); ++i) {
    d[static_cast<std::size_t>(i)] = eta.power(ctx.mul(coeff, i * i % ctx.p()));
  }
  return d;
}

void left_chirp(const std::vector<cplx>& diag, CMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= diag[r];
  }
}

void right_chirp(const std::vector<cplx>& diag, CMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= diag[c];
  }
}

CMatrix dft(const PrimeContext& ctx, const RootTable& eta) {
  const auto p = static_cast<std::size_t>(ctx.p());
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  CMatrix f(p, p);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < p; ++i) {
      f(j, i) = scale * eta.power(static_cast<Residue>(j * i % p));
    }
  }
  return f;
}

CMatrix compose(const PrimeContext& ctx, const BruhatFactorization& fact,
                double fourier_scale) {
  const RootTable eta = RootTable::eta(ctx);
  const auto& fs = fact.factors;
  std::size_t split = fs.size();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (std::holds_alternative<Fourier>(fs[i])) split = i;
  }

  CMatrix m;
  if (split < fs.size()) {
    m = dft(ctx, eta);
    if (fourier_scale != 1.0) m *= fourier_scale;
    for (std::size_t i = split + 1; i < fs.size(); ++i) {
      if (const auto* s = std::get_if<Scale>(&fs[i])) {
        right_scale(ctx, s->u, m);
      } else if (const auto* c = std::get_if<Chirp>(&fs[i])) {
        right_chirp(chirp_diagonal(ctx, eta, c->b), m);
      }
    }
  } else {
    m = CMatrix::identity(static_cast<std::size_t>(ctx.p()));
  }
  for (std::size_t i = split; i-- > 0;) {
    if (const auto* s = std::get_if<Scale>(&fs[i])) {
      left_scale(ctx, s->u, m);
    } else if (const auto* c = std::get_if<Chirp>(&fs[i])) {
      left_chirp(chirp_diagonal(ctx, eta, c->b), m);
    }
  }
  return m;
}

}  // namespace

SL2Element make_sl2(const PrimeContext& ctx, Residue a, Residue b, Residue c,
                    Residue d) {
  SL2Element g{ctx.p(), ctx.reduce(a), ctx.reduce(b), ctx.reduce(c),
               ctx.reduce(d)};
  if (determinant(ctx, g) != 1) {
    throw Error(ErrorCode::NotInSL2,
                "determinant of [[" + std::to_string(g.a) + "," +
                    std::to_string(g.b) + "],[" + std::to_string(g.c) + "," +
                    std::to_string(g.d) + "]] is not 1 mod " +
                    std::to_string(ctx.p()));
  }
  return g;
}

SL2Element sl2_identity(const PrimeContext& ctx) { return {ctx.p(), 1, 0, 0, 1}; }

SL2Element weyl_element(const PrimeContext& ctx) {
  return {ctx.p(), 0, 1, ctx.neg(1), 0};
}

SL2Element scale_element(const PrimeContext& ctx, Residue u) {
  const Residue uu = ctx.reduce(u);
  return {ctx.p(), uu, 0, 0, mod_inverse(ctx, uu)};
}

SL2Element chirp_element(const PrimeContext& ctx, Residue b) {
  return {ctx.p(), 1, 0, ctx.reduce(b), 1};
}

SL2Element sl2_mul(const PrimeContext& ctx, const SL2Element& g,
                   const SL2Element& h) {
  require_context(ctx, g);
  require_context(ctx, h);
  return {ctx.p(), ctx.add(ctx.mul(g.a, h.a), ctx.mul(g.b, h.c)),
          ctx.add(ctx.mul(g.a, h.b), ctx.mul(g.b, h.d)),
          ctx.add(ctx.mul(g.c, h.a), ctx.mul(g.d, h.c)),
          ctx.add(ctx.mul(g.c, h.b), ctx.mul(g.d, h.d))};
}

SL2Element sl2_inverse(const PrimeContext& ctx, const SL2Element& g) {
  require_context(ctx, g);
  return {ctx.p(), g.d, ctx.neg(g.b), ctx.neg(g.c), g.a};
}

SL2Element sl2_pow(const PrimeContext& ctx, const SL2Element& g, std::uint64_t e) {
  SL2Element result = sl2_identity(ctx);
  SL2Element base = g;
  while (e > 0) {
    if (e & 1U) result = sl2_mul(ctx, result, base);
    base = sl2_mul(ctx, base, base);
    e >>= 1U;
  }
  return result;
}

std::uint64_t sl2_order(const PrimeContext& ctx, const SL2Element& g) {
  const SL2Element id = sl2_identity(ctx);
  SL2Element x = g;
  std::uint64_t n = 1;
  while (!(x == id)) {
    x = sl2_mul(ctx, x, g);
    ++n;
  }
  return n;
}

HeisenbergElement sl2_act_on_h(const PrimeContext& ctx, const SL2Element& g,
                               const HeisenbergElement& h) {
  require_context(ctx, g);
  if (h.p != ctx.p()) {
    throw Error(ErrorCode::ContextMismatch, "sl2_act_on_h: Heisenberg element over p=" +
                                                std::to_string(h.p));
  }
  return {ctx.p(), ctx.add(ctx.mul(g.a, h.t), ctx.mul(g.b, h.w)),
          ctx.add(ctx.mul(g.c, h.t), ctx.mul(g.d, h.w)), h.z};
}

SL2Element random_sl2(const PrimeContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> draw(0, ctx.p() - 1);
  for (;;) {
    const Residue a = draw(rng);
    const Residue b = draw(rng);
    const Residue c = draw(rng);
    if (a == 0) continue;
    const Residue d = ctx.mul(ctx.add(1, ctx.mul(b, c)), ctx.inv(a));
    return {ctx.p(), a, b, c, d};
  }
}

BruhatFactorization bruhat_decompose(const PrimeContext& ctx, const SL2Element& g) {
  require_context(ctx, g);
  if (g.b != 0) {
    return {{Scale{g.b}, Chirp{ctx.mul(g.b, g.d)}, Fourier{},
             Chirp{ctx.mul(g.a, ctx.inv(g.b))}}};
  }
  return {{Scale{g.a}, Chirp{ctx.mul(g.a, g.c)}}};
}

SL2Element factor_element(const PrimeContext& ctx, const BruhatFactor& f) {
  if (const auto* s = std::get_if<Scale>(&f)) return scale_element(ctx, s->u);
  if (const auto* c = std::get_if<Chirp>(&f)) return chirp_element(ctx, c->b);
  return weyl_element(ctx);
}

SL2Element reconstruct(const PrimeContext& ctx, const BruhatFactorization& f) {
  SL2Element g = sl2_identity(ctx);
  for (const auto& factor : f.factors) g = sl2_mul(ctx, g, factor_element(ctx, factor));
  return g;
}

CMatrix rho_scale(const PrimeContext& ctx, Residue u) {
  const Residue uu = ctx.reduce(u);
  if (uu == 0) throw Error(ErrorCode::ZeroArgument, "rho_scale: u is 0");
  CMatrix m = CMatrix::identity(static_cast<std::size_t>(ctx.p()));
  left_scale(ctx, uu, m);
  return m;
}

CMatrix rho_chirp(const PrimeContext& ctx, Residue b) {
  const RootTable eta = RootTable::eta(ctx);
  const auto diag = chirp_diagonal(ctx, eta, ctx.reduce(b));
  return CMatrix::diagonal(diag);
}

CMatrix rho_fourier(const PrimeContext& ctx) {
  return dft(ctx, RootTable::eta(ctx));
}

int weil_lift_sign(const PrimeContext& ctx) { return ctx.legendre(2); }

CMatrix rho_matrix(const PrimeContext& ctx, const SL2Element& g) {
  return compose(ctx, bruhat_decompose(ctx, g), weil_lift_sign(ctx));
}

CMatrix projective_rho_matrix(const PrimeContext& ctx, const SL2Element& g) {
  return compose(ctx, bruhat_decompose(ctx, g), 1.0);
}

bool torus_membership(const PrimeContext& ctx, const SL2Element& g) {
  if (g.p != ctx.p()) return false;
  const Residue alpha = g.a;
  const Residue beta = g.c;
  return g.d == alpha && g.b == ctx.neg(beta) &&
         ctx.add(ctx.mul(alpha, alpha), ctx.mul(beta, beta)) == 1;
}

SL2Element torus_conjugator(const PrimeContext& ctx) {
  const Residue ak = ctx.pow(ctx.generator(), ctx.k());
  return make_sl2(ctx, 1, ctx.mul(ctx.half(), ak), ak, ctx.half());
}

SL2Element torus_generator(const PrimeContext& ctx) {
  const SL2Element s = torus_conjugator(ctx);
  const SL2Element ga = scale_element(ctx, ctx.generator());
  return sl2_mul(ctx, sl2_mul(ctx, s, ga), sl2_inverse(ctx, s));
}

}  // namespace dftbasis
