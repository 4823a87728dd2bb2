#include <doctest.h>

#include <set>

#include "dftbasis/arith.hpp"
#include "dftbasis/error.hpp"

using namespace dftbasis;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected dftbasis::Error");
  return ErrorCode::NotPrime;
}

// Brute-force multiplicative order, independent of prime_factors.
Residue order_mod(Residue g, Residue p) {
  Residue x = g % p;
  Residue n = 1;
  while (x != 1) {
    x = x * g % p;
    ++n;
  }
  return n;
}

const Residue kPrimes[] = {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113, 1009};

}  // namespace

TEST_CASE("make_context for p = 5 uses the smallest primitive root") {
  const PrimeContext ctx = make_context(5);
  CHECK(ctx.p() == 5);
  CHECK(ctx.k() == 1);
  CHECK(ctx.generator() == 2);
  // 2^0=1, 2^1=2, 2^2=4, 2^3=3 mod 5
  CHECK(ctx.dlog(1) == 0);
  CHECK(ctx.dlog(2) == 1);
  CHECK(ctx.dlog(4) == 2);
  CHECK(ctx.dlog(3) == 3);
}

TEST_CASE("generator override") {
  const PrimeContext ctx = make_context(5, 3);
  CHECK(ctx.generator() == 3);
  // 3^1=3, 3^2=4, 3^3=2
  CHECK(ctx.dlog(3) == 1);
  CHECK(ctx.dlog(4) == 2);
  CHECK(ctx.dlog(2) == 3);

  CHECK(make_context(13, 2).generator() == 2);
  CHECK(code_of([] { make_context(13, 4); }) == ErrorCode::NotAGenerator);
  CHECK(code_of([] { make_context(13, 0); }) == ErrorCode::NotAGenerator);
  CHECK(code_of([] { make_context(13, 13); }) == ErrorCode::NotAGenerator);
  // Residues are taken mod p.
  CHECK(make_context(13, 15).generator() == 2);
}

TEST_CASE("context gates") {
  CHECK(code_of([] { make_context(7); }) == ErrorCode::NotOneMod4);
  CHECK(code_of([] { make_context(3); }) == ErrorCode::NotOneMod4);
  CHECK(code_of([] { make_context(2); }) == ErrorCode::NotOneMod4);
  CHECK(code_of([] { make_context(9); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_context(1); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_context(0); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_context(-13); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_context(21); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_context(kMaxPrime + 1); }) == ErrorCode::TooLarge);
}

TEST_CASE("legendre_symbol examples") {
  const PrimeContext c5 = make_context(5);
  CHECK(legendre_symbol(c5, 1) == 1);
  CHECK(legendre_symbol(c5, 2) == -1);
  CHECK(legendre_symbol(make_context(13), 4) == 1);
  CHECK(legendre_symbol(c5, 7) == -1);   // 7 ≡ 2
  CHECK(legendre_symbol(c5, -1) == 1);   // p ≡ 1 mod 4
  CHECK(code_of([&] { legendre_symbol(c5, 0); }) == ErrorCode::ZeroArgument);
  CHECK(code_of([&] { legendre_symbol(c5, 10); }) == ErrorCode::ZeroArgument);
}

TEST_CASE("mod_inverse examples") {
  CHECK(mod_inverse(make_context(5), 2) == 3);
  const PrimeContext c13 = make_context(13);
  CHECK(mod_inverse(c13, 1) == 1);
  CHECK(mod_inverse(c13, 2) == 7);
  CHECK(mod_inverse(c13, -1) == 12);
  CHECK(c13.half() == 7);
  CHECK(code_of([&] { mod_inverse(c13, 26); }) == ErrorCode::ZeroArgument);
  CHECK(code_of([&] { discrete_log(c13, 0); }) == ErrorCode::ZeroArgument);
}

TEST_CASE("context invariants hold for every test prime") {
  for (Residue p : kPrimes) {
    CAPTURE(p);
    const PrimeContext ctx = make_context(p);
    const Residue a = ctx.generator();

    CHECK(order_mod(a, p) == p - 1);
    for (Residue g = 2; g < a; ++g) CHECK(order_mod(g, p) < p - 1);

    std::set<Residue> logs;
    Residue squares = 0;
    for (Residue b = 1; b < p; ++b) {
      const Residue e = ctx.dlog(b);
      CHECK(pow_mod(a, e, p) == b);
      logs.insert(e);
      CHECK(b * ctx.inv(b) % p == 1);
      // Euler's criterion as the independent reference.
      const Residue euler = pow_mod(b, (p - 1) / 2, p);
      CHECK(legendre_symbol(ctx, b) == (euler == 1 ? 1 : -1));
      CHECK(legendre_symbol(ctx, b) == (e % 2 == 0 ? 1 : -1));
      if (ctx.legendre(b) == 1) ++squares;
    }
    CHECK(logs.size() == static_cast<std::size_t>(p - 1));
    CHECK(*logs.rbegin() == p - 2);
    CHECK(squares == (p - 1) / 2);
    CHECK(ctx.legendre(a) == -1);
  }
}

TEST_CASE("legendre character is multiplicative") {
  const PrimeContext ctx = make_context(97);
  for (Residue b = 1; b < 97; b += 3) {
    for (Residue c = 1; c < 97; c += 5) {
      CHECK(ctx.legendre(b * c % 97) == ctx.legendre(b) * ctx.legendre(c));
    }
  }
}

TEST_CASE("helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(1009));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(1011));
  CHECK(prime_factors(12) == std::vector<Residue>{2, 3});
  CHECK(prime_factors(1008) == std::vector<Residue>{2, 3, 7});
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(-2, 3, 5) == 2);
  CHECK(smallest_primitive_root(17) == 3);
  CHECK(smallest_primitive_root(41) == 6);
}
