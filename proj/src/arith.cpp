#include "dftbasis/arith.hpp"

#include <string>

#include "dftbasis/error.hpp"

namespace dftbasis {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotOneMod4: return "NotOneMod4";
    case ErrorCode::NotAGenerator: return "NotAGenerator";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotInSL2: return "NotInSL2";
    case ErrorCode::NotOrderFour: return "NotOrderFour";
  }
  return "Unknown";
}

bool is_prime(Residue n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Residue d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Residue pow_mod(Residue base, Residue exp, Residue m) {
  Residue result = 1 % m;
  Residue b = base % m;
  if (b < 0) b += m;
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return result;
}

std::vector<Residue> prime_factors(Residue n) {
  std::vector<Residue> out;
  for (Residue d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_primitive_root(Residue g, Residue p) {
  g %= p;
  if (g < 0) g += p;
  if (g == 0) return false;
  for (Residue q : prime_factors(p - 1)) {
    if (pow_mod(g, (p - 1) / q, p) == 1) return false;
  }
  return true;
}

Residue smallest_primitive_root(Residue p) {
  for (Residue g = 1; g < p; ++g) {
    if (is_primitive_root(g, p)) return g;
  }
  return 0;
}

PrimeContext make_context(Residue p, std::optional<Residue> generator_override) {
  if (p > kMaxPrime) {
    throw Error(ErrorCode::TooLarge,
                "p = " + std::to_string(p) + " exceeds the supported maximum " +
                    std::to_string(kMaxPrime));
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (p % 4 != 1) {
    throw Error(ErrorCode::NotOneMod4, "p must be ≡ 1 (mod 4), got " +
                                           std::to_string(p));
  }

  Residue a = 0;
  if (generator_override) {
    a = *generator_override % p;
    if (a < 0) a += p;
    if (!is_primitive_root(a, p)) {
      throw Error(ErrorCode::NotAGenerator,
                  std::to_string(*generator_override) +
                      " does not generate the multiplicative group mod " +
                      std::to_string(p));
    }
  } else {
    a = smallest_primitive_root(p);
  }

  PrimeContext ctx;
  ctx.p_ = p;
  ctx.k_ = (p - 1) / 4;
  ctx.a_ = a;
  const auto n = static_cast<std::size_t>(p);
  ctx.dlog_.assign(n, -1);
  ctx.inv_.assign(n, 0);
  ctx.legendre_.assign(n, 0);

  std::vector<Residue> powers(n - 1);
  Residue x = 1;
  for (Residue e = 0; e < p - 1; ++e) {
    powers[static_cast<std::size_t>(e)] = x;
    ctx.dlog_[static_cast<std::size_t>(x)] = e;
    ctx.legendre_[static_cast<std::size_t>(x)] = (e % 2 == 0) ? 1 : -1;
    x = x * a % p;
  }
  // a^e * a^(p-1-e) = 1
  for (Residue e = 0; e < p - 1; ++e) {
    const Residue b = powers[static_cast<std::size_t>(e)];
    ctx.inv_[static_cast<std::size_t>(b)] =
        powers[static_cast<std::size_t>((p - 1 - e) % (p - 1))];
  }
  return ctx;
}

namespace {

Residue nonzero(const PrimeContext& ctx, Residue b, const char* what) {
  const Residue r = ctx.reduce(b);
  if (r == 0) {
    throw Error(ErrorCode::ZeroArgument,
                std::string(what) + ": argument is 0 mod " +
                    std::to_string(ctx.p()));
  }
  return r;
}

}  // namespace

int legendre_symbol(const PrimeContext& ctx, Residue b) {
  return ctx.legendre(nonzero(ctx, b, "legendre_symbol"));
}

Residue mod_inverse(const PrimeContext& ctx, Residue b) {
  return ctx.inv(nonzero(ctx, b, "mod_inverse"));
}

Residue discrete_log(const PrimeContext& ctx, Residue b) {
  return ctx.dlog(nonzero(ctx, b, "discrete_log"));
}

}  // namespace dftbasis
