#pragma once

// Ideal counts in Q(sqrt(-3)), the ring of Eisenstein integers.
//
// zeta_{Q(sqrt(-3))}(s) = zeta(s) L(s, chi) with chi the nontrivial character
// mod 3, so d_N = sum_{d | N} chi(d). Multiplicatively: a prime p = 1 mod 3
// splits (p^k has k+1 ideals of that norm), 3 ramifies (one ideal), and a prime
// q = 2 mod 3 is inert (one ideal of norm q^k for even k, none for odd k).

#include <cstdint>
#include <vector>

namespace cubictrace {

/// d_N via the multiplicative formula on the factorization of N.
std::uint64_t ideal_count(std::uint64_t n);

/// d_N via the divisor sum of chi3. Independent of ideal_count.
std::uint64_t ideal_count_oracle(std::uint64_t n);

/// N-th Dirichlet coefficient of (1 - 3^-s) zeta_{Q(sqrt(-3))}(s):
/// d_N - d_{N/3} when 3 | N, else d_N.
std::uint64_t series_coeff(std::uint64_t n);

/// Largest divisor of N built from primes = 1 mod 3.
std::uint64_t p1_part(std::uint64_t n);

/// sigma_0(p1_part(N)).
std::uint64_t formula3_count(std::uint64_t n);

/// True iff the part of N made of primes = 2 mod 3 is a perfect square.
bool inert_part_is_square(std::uint64_t n);

struct IdealCountTable {
  std::uint64_t max_n = 0;
  std::vector<std::uint64_t> counts;  // counts[N - 1] = d_N

  std::uint64_t at(std::uint64_t n) const { return counts.at(n - 1); }
};

IdealCountTable ideal_count_table(std::uint64_t max_n, bool use_oracle = false);

}  // namespace cubictrace
