#pragma once

// Exact arithmetic over F_p for primes p ≡ 1 (mod 4).

#include <cstdint>
#include <optional>
#include <vector>

namespace dftbasis {

using Residue = std::int64_t;

// Largest accepted prime. Keeps every product of two residues inside int64
// and the O(p) tables at desk scale.
inline constexpr Residue kMaxPrime = Residue{1} << 24;

bool is_prime(Residue n);

// (base^exp) mod m, exp >= 0, m >= 1.
Residue pow_mod(Residue base, Residue exp, Residue m);

// Distinct prime factors of n > 1, ascending.
std::vector<Residue> prime_factors(Residue n);

// Immutable after construction. Holds the generator a and the lookup tables
// every downstream formula indexes: discrete logs base a, inverses, and the
// Legendre character.
class PrimeContext {
 public:
  Residue p() const { return p_; }
  // (p - 1) / 4
  Residue k() const { return k_; }
  Residue generator() const { return a_; }

  Residue reduce(Residue x) const {
    const Residue r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  Residue add(Residue x, Residue y) const { return reduce(x + y); }
  Residue sub(Residue x, Residue y) const { return reduce(x - y); }
  Residue mul(Residue x, Residue y) const { return reduce(reduce(x) * reduce(y)); }
  Residue neg(Residue x) const { return reduce(-x); }
  Residue pow(Residue x, Residue e) const { return pow_mod(reduce(x), e, p_); }

  // Table lookups. Arguments must be reduced and nonzero; use the checked
  // free functions below for untrusted input.
  Residue dlog(Residue b) const { return dlog_[static_cast<std::size_t>(b)]; }
  Residue inv(Residue b) const { return inv_[static_cast<std::size_t>(b)]; }
  int legendre(Residue b) const { return legendre_[static_cast<std::size_t>(b)]; }

  // 2^-1 mod p.
  Residue half() const { return inv_[2]; }

 private:
  friend PrimeContext make_context(Residue, std::optional<Residue>);
  PrimeContext() = default;

  Residue p_ = 0;
  Residue k_ = 0;
  Residue a_ = 0;
  std::vector<Residue> dlog_;
  std::vector<Residue> inv_;
  std::vector<signed char> legendre_;
};

bool is_primitive_root(Residue g, Residue p);

// Smallest primitive root mod p.
Residue smallest_primitive_root(Residue p);

// Throws Error{NotPrime | NotOneMod4 | TooLarge | NotAGenerator}.
PrimeContext make_context(Residue p,
                          std::optional<Residue> generator_override = {});

// sigma(b) = b^((p-1)/2) as +1/-1. Throws Error{ZeroArgument} for b ≡ 0.
int legendre_symbol(const PrimeContext& ctx, Residue b);

// Throws Error{ZeroArgument} for b ≡ 0.
Residue mod_inverse(const PrimeContext& ctx, Residue b);

// log_a b in {0, ..., p-2}. Throws Error{ZeroArgument} for b ≡ 0.
Residue discrete_log(const PrimeContext& ctx, Residue b);

}  // namespace dftbasis
