#include "dftbasis/oscillator.hpp"

#include <cmath>
#include <string>

#include "dftbasis/error.hpp"

namespace dftbasis {

namespace {

void require_index(const PrimeContext& ctx, Residue x, const char* what) {
  if (x < 0 || x >= ctx.p()) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(what) + ": index " + std::to_string(x) +
                    " outside [0, " + std::to_string(ctx.p()) + ")");
  }
}

void require_length(const OscillatorBasis& basis, const CVector& v,
                    const char* what) {
  if (v.size() != static_cast<std::size_t>(basis.p())) {
    throw Error(ErrorCode::LengthMismatch,
                std::string(what) + ": vector length " +
                    std::to_string(v.size()) + " != p=" +
                    std::to_string(basis.p()));
  }
}

// Shared exponent bookkeeping for phi_x, all reduced mod p.
struct PhiExponents {
  Residue ak;       // a^k
  Residue half_ak;  // 2^-1 a^k
};

PhiExponents phi_exponents(const PrimeContext& ctx) {
  const Residue ak = ctx.pow(ctx.generator(), ctx.k());
  return {ak, ctx.mul(ctx.half(), ak)};
}

// kernel(i, j - 1) = eta^(a^k (j - i)^2), j = 1..p-1
CMatrix quadratic_kernel(const PrimeContext& ctx, const RootTable& eta,
                         Residue ak) {
  const Residue p = ctx.p();
  const auto n = static_cast<std::size_t>(p);
  CMatrix k(n, n - 1);
  for (Residue i = 0; i < p; ++i) {
    for (Residue j = 1; j < p; ++j) {
      const Residue diff = ctx.sub(j, i);
      k(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) =
          eta.power(ctx.mul(ak, diff * diff % p));
    }
  }
  return k;
}

// characters(j - 1, x - 1) = theta^(x log_a j), j, x = 1..p-1
CMatrix character_table(const PrimeContext& ctx, const RootTable& theta) {
  const Residue p = ctx.p();
  const auto n = static_cast<std::size_t>(p - 1);
  CMatrix m(n, n);
  for (Residue j = 1; j < p; ++j) {
    const Residue lj = ctx.dlog(j);
    for (Residue x = 1; x < p; ++x) {
      m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(x - 1)) =
          theta.power(x * lj % (p - 1));
    }
  }
  return m;
}

CVector phi_zero(const PrimeContext& ctx, const RootTable& eta, Residue half_ak) {
  const Residue p = ctx.p();
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  CVector v(static_cast<std::size_t>(p));
  for (Residue i = 0; i < p; ++i) {
    v[static_cast<std::size_t>(i)] = scale * eta.power(ctx.mul(half_ak, i * i % p));
  }
  return v;
}

// Applies the outer chirp eta^(-2^-1 a^k i^2) and normalization to a column of
// kernel * characters.
void finish_phi(const PrimeContext& ctx, const RootTable& eta, Residue half_ak,
                CVector& v) {
  const Residue p = ctx.p();
  const double scale =
      1.0 / std::sqrt(static_cast<double>(p) * static_cast<double>(p - 1));
  for (Residue i = 0; i < p; ++i) {
    v[static_cast<std::size_t>(i)] *=
        scale * eta.power(ctx.neg(ctx.mul(half_ak, i * i % p)));
  }
}

}  // namespace

CVector psi_vector(const PrimeContext& ctx, Residue x) {
  require_index(ctx, x, "psi_vector");
  const Residue p = ctx.p();
  CVector v(static_cast<std::size_t>(p));
  if (x == 0) {
    v[0] = 1.0;
    return v;
  }
  const RootTable theta = RootTable::theta(ctx);
  const double scale = 1.0 / std::sqrt(static_cast<double>(p - 1));
  for (Residue i = 1; i < p; ++i) {
    v[static_cast<std::size_t>(i)] = scale * theta.power(x * ctx.dlog(i) % (p - 1));
  }
  return v;
}

cplx psi_rho_ga_eigenvalue(const PrimeContext& ctx, Residue x) {
  require_index(ctx, x, "psi_rho_ga_eigenvalue");
  return RootTable::theta(ctx).power((ctx.p() - 1) / 2 - x);
}

CVector phi_vector(const PrimeContext& ctx, Residue x) {
  require_index(ctx, x, "phi_vector");
  const RootTable eta = RootTable::eta(ctx);
  const PhiExponents e = phi_exponents(ctx);
  if (x == 0) return phi_zero(ctx, eta, e.half_ak);

  const Residue p = ctx.p();
  const RootTable theta = RootTable::theta(ctx);
  CVector chars(static_cast<std::size_t>(p - 1));
  for (Residue j = 1; j < p; ++j) {
    chars[static_cast<std::size_t>(j - 1)] = theta.power(x * ctx.dlog(j) % (p - 1));
  }
  CVector v = quadratic_kernel(ctx, eta, e.ak) * chars;
  finish_phi(ctx, eta, e.half_ak, v);
  return v;
}

cplx dft_eigenvalue(Residue x) {
  static constexpr cplx kPowers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  Residue r = x % 4;
  if (r < 0) r += 4;
  return kPowers[r];
}

cplx dft_eigenvalue(const PrimeContext& ctx, Residue x) {
  require_index(ctx, x, "dft_eigenvalue");
  return dft_eigenvalue(x);
}

cplx torus_eigenvalue(const PrimeContext& ctx, Residue x) {
  require_index(ctx, x, "torus_eigenvalue");
  return RootTable::theta(ctx).power((ctx.p() - 1) / 2 - x);
}

std::vector<cplx> OscillatorBasis::dft_spectrum() const {
  std::vector<cplx> d;
  d.reserve(records_.size());
  for (const auto& r : records_) d.push_back(r.dft_eigenvalue);
  return d;
}

OscillatorBasis build_basis(const PrimeContext& ctx) {
  const Residue p = ctx.p();
  const auto n = static_cast<std::size_t>(p);
  const RootTable eta = RootTable::eta(ctx);
  const RootTable theta = RootTable::theta(ctx);
  const PhiExponents e = phi_exponents(ctx);

  const CMatrix sums = quadratic_kernel(ctx, eta, e.ak) * character_table(ctx, theta);

  std::vector<EigenvectorRecord> records;
  records.reserve(n);
  CMatrix transform(n, n);
  for (Residue x = 0; x < p; ++x) {
    CVector v;
    if (x == 0) {
      v = phi_zero(ctx, eta, e.half_ak);
    } else {
      v = sums.column(static_cast<std::size_t>(x - 1));
      finish_phi(ctx, eta, e.half_ak, v);
    }
    transform.set_column(static_cast<std::size_t>(x), v);
    records.push_back({x, std::move(v), dft_eigenvalue(x),
                       theta.power((p - 1) / 2 - x)});
  }
  return {p, ctx.generator(), std::move(records), std::move(transform)};
}

CVector oscillator_transform(const OscillatorBasis& basis, const CVector& v) {
  require_length(basis, v, "oscillator_transform");
  CVector out(v.size());
  for (const auto& r : basis.records()) {
    out[static_cast<std::size_t>(r.x)] = inner_product(r.vector, v);
  }
  return out;
}

CVector oscillator_synthesis(const OscillatorBasis& basis, const CVector& coeffs) {
  require_length(basis, coeffs, "oscillator_synthesis");
  return basis.transform() * coeffs;
}

}  // namespace dftbasis
