// dftbasis: emit DFT eigenbases, run the verification suite, time the
// closed-form construction against the projector route.
//
// Exit codes: 0 success, 1 a verification check failed, 2 invalid input or
// I/O error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dftbasis/arith.hpp"
#include "dftbasis/error.hpp"
#include "dftbasis/io.hpp"
#include "dftbasis/oscillator.hpp"
#include "dftbasis/simd/kernels.hpp"
#include "dftbasis/verify.hpp"
#include "dftbasis/weil.hpp"

namespace {

using namespace dftbasis;

constexpr int kExitFailedCheck = 1;
constexpr int kExitBadInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Residue parse_integer(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

// "A..B" selects every prime p ≡ 1 (mod 4) in [A, B]; "a,b,c" lists primes
// explicitly and each one must pass the context gates.
std::vector<Residue> parse_primes(const std::string& spec) {
  std::vector<Residue> out;
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const Residue lo = parse_integer(spec.substr(0, dots));
    const Residue hi = parse_integer(spec.substr(dots + 2));
    if (hi > kMaxPrime) throw UsageError("range end exceeds " + std::to_string(kMaxPrime));
    for (Residue n = std::max<Residue>(lo, 2); n <= hi; ++n) {
      if (n % 4 == 1 && is_prime(n)) out.push_back(n);
    }
    if (out.empty()) throw UsageError("no primes ≡ 1 (mod 4) in " + spec);
    return out;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const std::string item =
        spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) out.push_back(parse_integer(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Residue> collect_primes(const std::optional<Residue>& prime,
                                    const std::string& primes) {
  std::vector<Residue> out;
  if (prime) out.push_back(*prime);
  if (!primes.empty()) {
    for (Residue p : parse_primes(primes)) out.push_back(p);
  }
  if (out.empty()) throw UsageError("no primes given (use --prime or --primes)");
  return out;
}

io::Format to_format(const std::string& name) {
  const auto f = io::parse_format(name);
  if (!f) throw UsageError("unknown format '" + name + "' (expected json or csv)");
  return *f;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + out_path + "'");
}

int run_basis(Residue p, std::optional<Residue> generator, const std::string& format,
              const std::string& out_path) {
  const auto fmt = to_format(format);
  const PrimeContext ctx = make_context(p, generator);
  emit(io::write_basis(io::to_document(build_basis(ctx)), fmt), out_path);
  return 0;
}

int run_verify(const std::vector<Residue>& primes, std::optional<Residue> generator,
               std::optional<double> tol, std::uint64_t seed, const std::string& format,
               const std::string& out_path) {
  const auto fmt = to_format(format);
  std::vector<PrimeContext> contexts;
  for (Residue p : primes) contexts.push_back(make_context(p, generator));

  std::vector<VerificationReport> reports;
  bool ok = true;
  for (const auto& ctx : contexts) {
    SuiteOptions opts;
    opts.seed = seed;
    opts.tolerance = tol;
    reports.push_back(run_full_suite(ctx, opts));
    const auto& r = reports.back();
    ok = ok && r.passed();
    for (const auto& c : r.checks) {
      if (!c.pass) {
        std::cerr << "p=" << r.p << " FAILED " << c.name << ": residual "
                  << c.residual << " >= " << c.tolerance << '\n';
      }
    }
  }
  emit(io::write_reports(reports, seed, fmt), out_path);
  return ok ? 0 : kExitFailedCheck;
}

template <class F>
double time_once(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_bench(const std::vector<Residue>& primes, int reps, const std::string& format,
              const std::string& out_path) {
  const auto fmt = to_format(format);
  if (reps < 1) throw UsageError("--reps must be at least 1");
  std::vector<io::BenchRow> rows;
  for (Residue p : primes) {
    const PrimeContext ctx = make_context(p);
    io::BenchRow row{p, ctx.generator(), {}, {}};
    for (int r = 0; r < reps; ++r) {
      row.build_basis_seconds.push_back(time_once([&] { (void)build_basis(ctx); }));
      row.projector_seconds.push_back(time_once([&] {
        (void)spectral_projectors(rho_fourier(ctx), default_tolerance(p));
      }));
    }
    rows.push_back(std::move(row));
  }
  emit(io::write_bench(rows, simd::active().name, fmt), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical DFT eigenbases for primes p ≡ 1 (mod 4)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dftbasis::io::kToolVersion));

  std::optional<Residue> prime;
  std::optional<Residue> generator;
  std::string primes;
  std::string format = "json";
  std::string out_path;
  std::optional<double> tol;
  std::uint64_t seed = dftbasis::kDefaultSeed;
  int reps = 3;

  auto* basis = app.add_subcommand("basis", "Write Theta_p and its eigenvalues");
  basis->add_option("--prime", prime, "Prime p ≡ 1 (mod 4)")->required();
  basis->add_option("--generator", generator, "Primitive root a (default: smallest)");
  basis->add_option("--format", format, "json or csv")->capture_default_str();
  basis->add_option("--out", out_path, "Output path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--prime", prime, "Single prime");
  verify->add_option("--primes", primes, "Range A..B or comma list");
  verify->add_option("--generator", generator, "Primitive root a (default: smallest)");
  verify->add_option("--tol", tol, "Tolerance (default 1e-12 * p)");
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--format", format, "json or csv")->capture_default_str();
  verify->add_option("--out", out_path, "Output path (default: stdout)");

  auto* bench = app.add_subcommand("bench", "Time build_basis and the projector route");
  bench->add_option("--prime", prime, "Single prime");
  bench->add_option("--primes", primes, "Range A..B or comma list");
  bench->add_option("--reps", reps, "Repetitions per prime")->capture_default_str();
  bench->add_option("--format", format, "json or csv")->capture_default_str();
  bench->add_option("--out", out_path, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (basis->parsed()) return run_basis(*prime, generator, format, out_path);
    if (verify->parsed()) {
      return run_verify(collect_primes(prime, primes), generator, tol, seed, format,
                        out_path);
    }
    if (bench->parsed()) {
      return run_bench(collect_primes(prime, primes), reps, format, out_path);
    }
  } catch (const dftbasis::Error& e) {
    std::cerr << "error: " << dftbasis::to_string(e.code()) << ": " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
