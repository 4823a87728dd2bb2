// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dftbasis/arith.hpp"
#include "dftbasis/cyclotomic.hpp"
#include "dftbasis/heisenberg.hpp"
#include "dftbasis/oscillator.hpp"
#include "dftbasis/simd/kernels.hpp"
#include "dftbasis/verify.hpp"
#include "dftbasis/weil.hpp"

using namespace dftbasis;

namespace {

constexpr std::uint64_t kSeed = 20091117;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Residue> primes_one_mod_four(Residue hi) {
  std::vector<Residue> out;
  for (Residue n = 5; n <= hi; n += 4) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

HeisenbergElement random_h(const PrimeContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> d(0, ctx.p() - 1);
  const Residue t = d(rng), w = d(rng), z = d(rng);
  return make_heisenberg(ctx, t, w, z);
}

Outcome diagonalization() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_ratio = 0.0;
  double worst = 0.0;
  for (Residue p : primes_one_mod_four(101)) {
    const PrimeContext ctx = make_context(p);
    const OscillatorBasis b = build_basis(ctx);
    const CMatrix& theta = b.transform();
    const double r = frobenius_distance(rho_fourier(ctx) * theta,
                                        theta * CMatrix::diagonal(b.dft_spectrum()));
    const double tol = 1e-12 * static_cast<double>(p);
    if (r / tol > worst_ratio) {
      worst_ratio = r / tol;
      worst = r;
    }
  }
  return {worst_ratio < 1.0,
          fmt("max ||F Theta - Theta D||_F = %.3g (worst residual/tol %.3g), %.2f s", worst,
              worst_ratio, elapsed(t0))};
}

Outcome orthonormality() {
  double worst_ratio = 0.0;
  double worst = 0.0;
  for (Residue p : primes_one_mod_four(101)) {
    const OscillatorBasis b = build_basis(make_context(p));
    const double r = unitarity_residual(b.transform());
    const double tol = 1e-12 * static_cast<double>(p);
    if (r / tol > worst_ratio) {
      worst_ratio = r / tol;
      worst = r;
    }
  }
  return {worst_ratio < 1.0,
          fmt("max ||Theta^H Theta - I||_F = %.3g (worst residual/tol %.3g)", worst, worst_ratio)};
}

Outcome multiplicities() {
  bool ok = true;
  std::string bad;
  for (Residue p : {5, 13, 17, 29, 101}) {
    const Residue m = (p - 1) / 4;
    const std::array<long, 4> expected = {m + 1, m, m, m};
    const PrimeContext ctx = make_context(p);
    const OscillatorBasis b = build_basis(ctx);
    std::array<long, 4> listed{};
    for (const auto& r : b.records()) {
      for (FourthRoot l : kFourthRoots) {
        if (r.dft_eigenvalue == value(l)) ++listed[static_cast<std::size_t>(l)];
      }
    }
    const SpectralProjectors proj = spectral_projectors(rho_fourier(ctx), 1e-12 * p);
    std::array<long, 4> traced{};
    for (FourthRoot l : kFourthRoots) {
      traced[static_cast<std::size_t>(l)] = std::lround(proj[l].trace().real());
    }
    if (listed != expected || traced != expected) {
      ok = false;
      bad += " p=" + std::to_string(p);
    }
  }
  return {ok, ok ? "listed and projector-trace counts equal {m+1, m, m, m} for p in "
                   "{5,13,17,29,101}"
                 : "mismatch at" + bad};
}

Outcome pair_check(bool intertwining) {
  double worst = 0.0;
  for (Residue p : {5, 13, 29}) {
    const PrimeContext ctx = make_context(p);
    std::mt19937_64 rng(kSeed + static_cast<std::uint64_t>(p));
    for (int n = 0; n < 100; ++n) {
      const SL2Element g = random_sl2(ctx, rng);
      const CMatrix rg = rho_matrix(ctx, g);
      double r = 0.0;
      if (intertwining) {
        const HeisenbergElement h = random_h(ctx, rng);
        r = frobenius_distance(rg * pi_matrix(ctx, h) * rg.adjoint(),
                               pi_matrix(ctx, sl2_act_on_h(ctx, g, h)));
      } else {
        const SL2Element g2 = random_sl2(ctx, rng);
        r = frobenius_distance(rho_matrix(ctx, sl2_mul(ctx, g, g2)), rg * rho_matrix(ctx, g2));
      }
      worst = std::max(worst, r);
    }
  }
  const char* what = intertwining ? "max ||rho(g) pi(h) rho(g)^H - pi(g.h)||_F = %.3g"
                                  : "max ||rho(g1 g2) - rho(g1) rho(g2)||_F = %.3g";
  return {worst < 1e-10, fmt(what, worst)};
}

Outcome torus() {
  bool ok = true;
  double worst = 0.0;
  std::string bad;
  for (Residue p : {5, 13, 17, 29, 101}) {
    const PrimeContext ctx = make_context(p);
    const SL2Element t = torus_generator(ctx);
    const CMatrix f = rho_fourier(ctx);
    const CMatrix rt = rho_matrix(ctx, t);
    const double r = frobenius_distance(rt * f, f * rt);
    worst = std::max(worst, r);
    const bool member = torus_membership(ctx, t);
    const bool order = sl2_order(ctx, t) == static_cast<std::uint64_t>(p - 1);
    if (!member || !order || !(r < 1e-11)) {
      ok = false;
      bad += " p=" + std::to_string(p);
    }
  }
  const PrimeContext c5 = make_context(5);
  const bool p5 = torus_generator(c5) == make_sl2(c5, 0, 1, 4, 0);
  ok = ok && p5;
  std::string detail = fmt("max ||rho(t) F - F rho(t)||_F = %.3g", worst);
  detail += p5 ? ", t = [[0,1],[4,0]] at p=5" : ", t differs from [[0,1],[4,0]] at p=5";
  if (!bad.empty()) detail += ", failed at" + bad;
  return {ok, detail};
}

Outcome scale_eigenbasis() {
  double eig = 0.0;
  double orth = 0.0;
  for (Residue p : {5, 13, 29}) {
    const PrimeContext ctx = make_context(p);
    const CMatrix s = rho_scale(ctx, ctx.generator());
    std::vector<CVector> psi;
    for (Residue x = 0; x < p; ++x) {
      psi.push_back(psi_vector(ctx, x));
      eig = std::max(eig, distance(s * psi.back(), psi_rho_ga_eigenvalue(ctx, x) * psi.back()));
    }
    for (std::size_t x = 0; x < psi.size(); ++x) {
      for (std::size_t y = x + 1; y < psi.size(); ++y) {
        orth = std::max(orth, std::abs(inner_product(psi[x], psi[y])));
      }
    }
  }
  return {eig < 1e-11 && orth < 1e-11,
          fmt("max eigen residual %.3g, max |<psi_x, psi_y>| %.3g", eig, orth)};
}

Outcome conjugation() {
  double spread = 0.0;
  double modulus = 0.0;
  double imag = 0.0;
  double resid = 0.0;
  std::string constants;
  for (Residue p : {5, 13}) {
    const PrimeContext ctx = make_context(p);
    const CMatrix rs = rho_matrix(ctx, torus_conjugator(ctx));
    const OscillatorBasis b = build_basis(ctx);
    cplx c0{};
    for (Residue x = 0; x < p; ++x) {
      const CVector image = rs * psi_vector(ctx, x);
      const CVector& phi = b.record(x).vector;
      const cplx c = inner_product(phi, image);
      if (x == 0) c0 = c;
      spread = std::max(spread, std::abs(c - c0));
      modulus = std::max(modulus, std::abs(std::abs(c) - 1.0));
      imag = std::max(imag, std::abs(c.imag()));
      resid = std::max(resid, distance(image, c * phi));
    }
    constants += fmt(" c(%g)=%+.0f", static_cast<double>(p), c0.real());
  }
  const bool ok = spread < 1e-10 && modulus < 1e-10 && imag < 1e-10 && resid < 1e-10;
  return {ok, fmt("spread %.3g, ||c|-1| %.3g, |Im c| %.3g", spread, modulus, imag) +
                  fmt(", residual %.3g;", resid) + constants};
}

Outcome gauss() {
  double worst = 0.0;
  for (Residue p : {5, 13, 17, 29}) {
    const PrimeContext ctx = make_context(p);
    const double root = std::sqrt(static_cast<double>(p));
    for (Residue c = 1; c < p; ++c) {
      worst = std::max(worst, std::abs(gauss_sum(ctx, c) -
                                        static_cast<double>(legendre_symbol(ctx, c)) * root));
    }
  }
  return {worst < 1e-11, fmt("max |G(c) - sigma(c) sqrt(p)| = %.3g", worst)};
}

Outcome scaling() {
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport report = run_full_suite(make_context(1009));
  const double secs = elapsed(t0);
  std::string failed;
  for (const Check& c : report.checks) {
    if (!c.pass) failed += " " + c.name;
  }
  std::string detail = "p=1009, " + std::to_string(report.checks.size()) + " checks, " +
           fmt("%.1f s (limit 60 s)", secs);
  if (!failed.empty()) detail += ", failed:" + failed;
  return {report.passed() && secs < 60.0, detail};
}

}  // namespace

int main() {
  simd::select_best();
  std::printf("kernels: %s\n", std::string(simd::active().name).c_str());
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 diagonalization", diagonalization},
      {"2 orthonormality", orthonormality},
      {"3 eigenvalue multiplicities", multiplicities},
      {"4 intertwining", [] { return pair_check(true); }},
      {"5 homomorphism", [] { return pair_check(false); }},
      {"6 torus generator", torus},
      {"7 scale eigenbasis", scale_eigenbasis},
      {"8 conjugation route", conjugation},
      {"9 gauss sum law", gauss},
      {"10 scaling p=1009", scaling},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  %-28s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
