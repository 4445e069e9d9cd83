#pragma once

// Exact integer utilities shared by every other module: checked 128-bit
// arithmetic, integer square roots, factorization, the cubic residue
// character mod 3, divisors and subgroup closure in (Z/c)*.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubictrace {

using Int = __int128;
using UInt = unsigned __int128;

// Checked arithmetic. Every overflow throws std::overflow_error; nothing wraps.
Int checked_add(Int x, Int y);
Int checked_sub(Int x, Int y);
Int checked_mul(Int x, Int y);
Int checked_pow(Int base, unsigned exponent);

// Narrowing with a range check (std::overflow_error when out of range).
std::int64_t to_i64(Int x);
std::uint64_t to_u64(Int x);

std::string to_string(Int x);
// Parses an optionally signed decimal integer; throws std::invalid_argument on
// malformed text and std::overflow_error when the value does not fit.
Int parse_int(std::string_view text);

Int abs(Int x);
Int gcd(Int x, Int y);
// Floor division and the matching nonnegative remainder for positive m.
Int floor_div(Int x, Int m);
Int mod(Int x, Int m);

// floor(sqrt(n)) by exact integer Newton iteration; n >= 0.
Int isqrt(Int n);
// The root when n is a perfect square (negative n never is).
std::optional<Int> exact_sqrt(Int n);
bool is_perfect_square(Int n);

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
// Inverse of x modulo m; throws std::domain_error when gcd(x, m) != 1.
std::uint64_t invmod(std::uint64_t x, std::uint64_t m);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);
// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  // Strictly increasing primes, positive exponents. Empty for 1.
  std::vector<PrimePower> entries;

  Int value() const;
  std::uint64_t divisor_count() const;
  bool operator==(const Factorization&) const = default;
};

// Trial division up to 10^6, then Brent's variant of Pollard rho with a
// deterministic seed schedule. Requires 1 <= n < 2^64.
Factorization factorize(Int n);

// p-adic valuation of a nonzero integer.
unsigned valuation(Int n, std::uint64_t p);

// The nontrivial Dirichlet character mod 3.
int chi3(Int n);

// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(Int n);

std::uint64_t euler_phi(std::uint64_t n);

// Smallest multiplicatively closed subset of (Z/c)* containing 1 and the
// generators, as a sorted residue list. Throws std::invalid_argument on a
// generator that is not a unit mod c.
std::vector<std::uint64_t> subgroup_closure(std::uint64_t modulus,
                                            std::span<const std::uint64_t> generators);

}  // namespace cubictrace
