#include "dftbasis/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "dftbasis/error.hpp"
#include "dftbasis/heisenberg.hpp"
#include "dftbasis/weil.hpp"

namespace dftbasis {

cplx value(FourthRoot lambda) { return dft_eigenvalue(static_cast<Residue>(lambda)); }

std::string_view label(FourthRoot lambda) {
  switch (lambda) {
    case FourthRoot::One: return "1";
    case FourthRoot::MinusI: return "-i";
    case FourthRoot::MinusOne: return "-1";
    case FourthRoot::I: return "i";
  }
  return "?";
}

FourthRoot fourth_root_of_index(Residue x) {
  Residue r = x % 4;
  if (r < 0) r += 4;
  return static_cast<FourthRoot>(r);
}

SpectralProjectors spectral_projectors(const CMatrix& f, double tol) {
  const std::size_t n = f.rows();
  const CMatrix id = CMatrix::identity(n);
  const CMatrix f2 = f * f;
  const CMatrix f3 = f2 * f;
  const CMatrix f4 = f3 * f;
  SpectralProjectors out;
  out.order_four_residual = frobenius_distance(f4, id);
  if (!(out.order_four_residual < tol)) {
    throw Error(ErrorCode::NotOrderFour,
                "||F^4 - I||_F = " + std::to_string(out.order_four_residual) +
                    " exceeds tolerance " + std::to_string(tol));
  }
  const std::array<const CMatrix*, 4> powers = {&id, &f, &f2, &f3};
  for (FourthRoot lambda : kFourthRoots) {
    const int e = static_cast<int>(lambda);
    CMatrix p(n, n);
    for (int k = 0; k < 4; ++k) {
      // lambda^(-k) = (-i)^(-e k) = (-i)^((4 - e) k mod 4)
      const cplx coeff = 0.25 * dft_eigenvalue((4 - e) * k);
      const CMatrix& fk = *powers[static_cast<std::size_t>(k)];
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) p(r, c) += coeff * fk(r, c);
      }
    }
    out.projectors[static_cast<std::size_t>(e)] = std::move(p);
  }
  return out;
}

CMatrix spectral_projector(const CMatrix& f, FourthRoot lambda, double tol) {
  return spectral_projectors(f, tol)[lambda];
}

Check numeric_check(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, tolerance, residual < tolerance};
}

Check exact_check(std::string name, std::uint64_t violations) {
  return {std::move(name), static_cast<double>(violations), 0.0, violations == 0};
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<Check> check_basis_against_projectors(const OscillatorBasis& basis,
                                                  const SpectralProjectors& proj,
                                                  double tol) {
  std::vector<Check> out;

  double eigen = 0.0;
  std::array<std::size_t, 4> counts{};
  for (const auto& r : basis.records()) {
    const FourthRoot lambda = fourth_root_of_index(r.x);
    ++counts[static_cast<std::size_t>(lambda)];
    eigen = std::max(eigen, distance(proj[lambda] * r.vector, r.vector));
  }
  out.push_back(numeric_check("projector_eigen_residual", eigen, tol));

  double trace_gap = 0.0;
  long long rank_sum = 0;
  for (FourthRoot lambda : kFourthRoots) {
    const double tr = proj[lambda].trace().real();
    trace_gap = std::max(
        trace_gap,
        std::abs(tr - static_cast<double>(counts[static_cast<std::size_t>(lambda)])));
    rank_sum += std::llround(tr);
  }
  out.push_back(numeric_check("projector_trace_counts", trace_gap, 1e-6));
  out.push_back(exact_check(
      "projector_rank_sum",
      static_cast<std::uint64_t>(std::llabs(rank_sum - static_cast<long long>(basis.p())))));
  return out;
}

double default_tolerance(Residue p) { return 1e-12 * static_cast<double>(p); }

std::size_t default_random_pairs(Residue p) { return p <= 257 ? 100 : 16; }

namespace {

HeisenbergElement random_heisenberg(const PrimeContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> draw(0, ctx.p() - 1);
  const Residue t = draw(rng);
  const Residue w = draw(rng);
  const Residue z = draw(rng);
  return make_heisenberg(ctx, t, w, z);
}

CVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

// pi(h) applied to every column of m, O(p^2).
CMatrix pi_times(const PrimeContext& ctx, const HeisenbergElement& h,
                 const CMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    out.set_column(c, pi_apply(ctx, h, m.column(c)));
  }
  return out;
}

void heisenberg_checks(const PrimeContext& ctx, std::size_t pairs,
                       std::mt19937_64& rng, double tol,
                       std::vector<Check>& out) {
  const auto p = static_cast<std::size_t>(ctx.p());
  std::uint64_t assoc_failures = 0;
  double law = 0.0;
  double apply_gap = 0.0;
  double unitary = 0.0;
  for (std::size_t n = 0; n < pairs; ++n) {
    const HeisenbergElement h1 = random_heisenberg(ctx, rng);
    const HeisenbergElement h2 = random_heisenberg(ctx, rng);
    const HeisenbergElement h3 = random_heisenberg(ctx, rng);
    const auto left = heisenberg_mul(ctx, heisenberg_mul(ctx, h1, h2), h3);
    const auto right = heisenberg_mul(ctx, h1, heisenberg_mul(ctx, h2, h3));
    if (!(left == right)) ++assoc_failures;

    const CMatrix m2 = pi_matrix(ctx, h2);
    law = std::max(law, frobenius_distance(pi_times(ctx, h1, m2),
                                           pi_matrix(ctx, heisenberg_mul(ctx, h1, h2))));

    const CVector v = random_vector(p, rng);
    apply_gap = std::max(apply_gap, distance(pi_apply(ctx, h1, v), pi_matrix(ctx, h1) * v));
    if (n < 8) unitary = std::max(unitary, unitarity_residual(m2));
  }
  out.push_back(exact_check("heisenberg_associativity", assoc_failures));
  out.push_back(numeric_check("heisenberg_representation_law", law, tol));
  out.push_back(numeric_check("pi_apply_matches_matrix", apply_gap, tol));
  out.push_back(numeric_check("pi_unitarity", unitary, tol));
}

void weil_checks(const PrimeContext& ctx, std::size_t pairs, std::mt19937_64& rng,
                 double tol, std::vector<Check>& out) {
  double intertwining = 0.0;
  double homomorphism = 0.0;
  double unitary = 0.0;
  std::uint64_t reconstruction_failures = 0;
  for (std::size_t n = 0; n < pairs; ++n) {
    const SL2Element g = random_sl2(ctx, rng);
    const SL2Element g2 = random_sl2(ctx, rng);
    const HeisenbergElement h = random_heisenberg(ctx, rng);

    const CMatrix rg = rho_matrix(ctx, g);
    const CMatrix conj = rg * pi_matrix(ctx, h) * rg.adjoint();
    intertwining = std::max(
        intertwining, frobenius_distance(conj, pi_matrix(ctx, sl2_act_on_h(ctx, g, h))));

    homomorphism = std::max(
        homomorphism, frobenius_distance(rho_matrix(ctx, sl2_mul(ctx, g, g2)),
                                         rg * rho_matrix(ctx, g2)));
    unitary = std::max(unitary, unitarity_residual(rg));

    if (!(reconstruct(ctx, bruhat_decompose(ctx, g)) == g)) ++reconstruction_failures;
    if (!(reconstruct(ctx, bruhat_decompose(ctx, g2)) == g2)) ++reconstruction_failures;
  }
  // The b = 0 branch is rare under uniform sampling; cover it directly.
  std::uniform_int_distribution<Residue> draw(1, ctx.p() - 1);
  for (int n = 0; n < 16; ++n) {
    const SL2Element g = sl2_mul(ctx, scale_element(ctx, draw(rng)),
                                 chirp_element(ctx, draw(rng)));
    if (!(reconstruct(ctx, bruhat_decompose(ctx, g)) == g)) ++reconstruction_failures;
  }
  out.push_back(numeric_check("intertwining", intertwining, tol));
  out.push_back(numeric_check("rho_homomorphism", homomorphism, tol));
  out.push_back(numeric_check("rho_unitarity", unitary, tol));
  out.push_back(exact_check("bruhat_reconstruction", reconstruction_failures));
}

}  // namespace

VerificationReport run_full_suite(const PrimeContext& ctx, const SuiteOptions& options) {
  const Residue p = ctx.p();
  const auto n = static_cast<std::size_t>(p);
  VerificationReport report;
  report.p = p;
  report.generator = ctx.generator();
  report.seed = options.seed;
  report.tolerance = options.tolerance.value_or(default_tolerance(p));
  report.random_pairs = options.random_pairs.value_or(default_random_pairs(p));
  const double tol = report.tolerance;
  auto& checks = report.checks;
  std::mt19937_64 rng(options.seed);

  // Gauss sums
  {
    const double root_p = std::sqrt(static_cast<double>(p));
    double worst = 0.0;
    for (Residue c = 1; c < p; ++c) {
      worst = std::max(worst, std::abs(gauss_sum(ctx, c) - ctx.legendre(c) * root_p));
    }
    checks.push_back(numeric_check("gauss_sum_law", worst, tol));
  }

  heisenberg_checks(ctx, report.random_pairs, rng, tol, checks);
  weil_checks(ctx, report.random_pairs, rng, tol, checks);

  const CMatrix f = rho_fourier(ctx);

  // Torus T_w
  const SL2Element t = torus_generator(ctx);
  const CMatrix rho_t = rho_matrix(ctx, t);
  {
    checks.push_back(exact_check("torus_membership", torus_membership(ctx, t) ? 0 : 1));
    const std::uint64_t order = sl2_order(ctx, t);
    const auto expected = static_cast<std::uint64_t>(p - 1);
    checks.push_back(exact_check("torus_order",
                                 order > expected ? order - expected : expected - order));

    std::set<std::tuple<Residue, Residue, Residue, Residue>> seen;
    std::uint64_t outside = 0;
    SL2Element x = sl2_identity(ctx);
    for (Residue e = 0; e < p - 1; ++e) {
      if (!torus_membership(ctx, x)) ++outside;
      seen.emplace(x.a, x.b, x.c, x.d);
      x = sl2_mul(ctx, x, t);
    }
    const std::uint64_t missing = static_cast<std::uint64_t>(p - 1) - seen.size();
    checks.push_back(exact_check("torus_enumeration", outside + missing));
    checks.push_back(
        numeric_check("torus_commutes_with_dft", frobenius_distance(rho_t * f, f * rho_t), tol));
  }

  // Scale-operator eigenbasis psi_x
  std::vector<CVector> psi;
  psi.reserve(n);
  for (Residue x = 0; x < p; ++x) psi.push_back(psi_vector(ctx, x));
  const CMatrix psi_m = CMatrix::from_columns(psi);
  {
    const CMatrix image = rho_scale(ctx, ctx.generator()) * psi_m;
    double worst = 0.0;
    for (Residue x = 0; x < p; ++x) {
      const auto xs = static_cast<std::size_t>(x);
      worst = std::max(worst, distance(image.column(xs),
                                       psi_rho_ga_eigenvalue(ctx, x) * psi[xs]));
    }
    checks.push_back(numeric_check("psi_eigen_residual", worst, tol));
    checks.push_back(numeric_check("psi_orthonormality", unitarity_residual(psi_m), tol));
  }

  // The basis itself
  const OscillatorBasis basis = build_basis(ctx);
  const CMatrix& theta = basis.transform();
  {
    checks.push_back(numeric_check("theta_unitarity", unitarity_residual(theta), tol));
    const CMatrix d = CMatrix::diagonal(basis.dft_spectrum());
    checks.push_back(
        numeric_check("dft_diagonalization", frobenius_distance(f * theta, theta * d), tol));

    const CMatrix image = rho_t * theta;
    double worst = 0.0;
    for (const auto& r : basis.records()) {
      worst = std::max(worst, distance(image.column(static_cast<std::size_t>(r.x)),
                                       r.torus_eigenvalue * r.vector));
    }
    checks.push_back(numeric_check("torus_eigen_residual", worst, tol));
  }

  // Projector oracle
  {
    std::optional<SpectralProjectors> proj;
    try {
      proj = spectral_projectors(f, tol);
    } catch (const Error&) {
    }
    if (!proj) {
      checks.push_back(numeric_check("dft_order_four", INFINITY, tol));
    } else {
      checks.push_back(numeric_check("dft_order_four", proj->order_four_residual, tol));
      double idem = 0.0;
      double herm = 0.0;
      CMatrix sum(n, n);
      for (FourthRoot lambda : kFourthRoots) {
        const CMatrix& pm = (*proj)[lambda];
        idem = std::max(idem, frobenius_distance(pm * pm, pm));
        herm = std::max(herm, frobenius_distance(pm.adjoint(), pm));
        sum += pm;
      }
      checks.push_back(numeric_check("projector_idempotent", idem, 10 * tol));
      checks.push_back(numeric_check("projector_hermitian", herm, 10 * tol));
      checks.push_back(numeric_check("projector_resolution",
                                     frobenius_distance(sum, CMatrix::identity(n)), tol));
      for (auto& c : check_basis_against_projectors(basis, *proj, tol)) {
        checks.push_back(std::move(c));
      }
    }

    // p = 4m + 1 gives (m + 1, m, m, m) for (1, -i, -1, i).
    const std::uint64_t m = static_cast<std::uint64_t>(p - 1) / 4;
    std::array<std::uint64_t, 4> counts{};
    for (const auto& r : basis.records()) {
      const cplx ev = r.dft_eigenvalue;
      for (FourthRoot lambda : kFourthRoots) {
        if (ev == value(lambda)) ++counts[static_cast<std::size_t>(lambda)];
      }
    }
    const std::array<std::uint64_t, 4> expected = {m + 1, m, m, m};
    std::uint64_t off = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      off += counts[i] > expected[i] ? counts[i] - expected[i] : expected[i] - counts[i];
    }
    checks.push_back(exact_check("dft_multiplicities", off));
  }

  // phi_x against rho(s) psi_x, built through the Weil representation only.
  {
    const CMatrix image = rho_matrix(ctx, torus_conjugator(ctx)) * psi_m;
    std::vector<cplx> c(n);
    for (std::size_t x = 0; x < n; ++x) {
      c[x] = inner_product(basis.records()[x].vector, image.column(x));
    }
    double spread = 0.0;
    double residual = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      spread = std::max(spread, std::abs(c[x] - c[0]));
      residual = std::max(residual,
                          distance(image.column(x), c[0] * basis.records()[x].vector));
    }
    checks.push_back(numeric_check("conjugation_constant_spread", spread, tol));
    checks.push_back(
        numeric_check("conjugation_unit_modulus", std::abs(std::abs(c[0]) - 1.0), tol));
    checks.push_back(numeric_check("conjugation_real", std::abs(c[0].imag()), tol));
    checks.push_back(numeric_check("conjugation_residual", residual, tol));
  }

  return report;
}

}  // namespace dftbasis
