#include "cubictrace/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace cubictrace {

namespace {

constexpr Int kIntMax = static_cast<Int>(~static_cast<UInt>(0) >> 1);
constexpr Int kIntMin = -kIntMax - 1;
constexpr std::uint64_t kTrialBound = 1'000'000;

unsigned bit_length(UInt n) {
  unsigned bits = 0;
  while (n != 0) {
    n >>= 1;
    ++bits;
  }
  return bits;
}

std::uint64_t gcd_u64(std::uint64_t x, std::uint64_t y) {
  while (y != 0) {
    const std::uint64_t r = x % y;
    x = y;
    y = r;
  }
  return x;
}

// Brent's cycle detection on x -> x^2 + c mod n. Returns a nontrivial factor
// of the odd composite n.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2;
    std::uint64_t x = y;
    std::uint64_t g = 1;
    std::uint64_t q = 1;
    std::uint64_t ys = y;
    const std::uint64_t block = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
    }
    if (g == n) {
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("128-bit addition overflow");
  return r;
}

Int checked_sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("128-bit subtraction overflow");
  return r;
}

Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("128-bit multiplication overflow");
  return r;
}

Int checked_pow(Int base, unsigned exponent) {
  Int r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

std::int64_t to_i64(Int x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("value " + to_string(x) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

std::uint64_t to_u64(Int x) {
  if (x < 0 || x > static_cast<Int>(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("value " + to_string(x) + " does not fit in unsigned 64 bits");
  return static_cast<std::uint64_t>(x);
}

std::string to_string(Int x) {
  if (x == 0) return "0";
  const bool negative = x < 0;
  UInt u = negative ? static_cast<UInt>(-(x + 1)) + 1 : static_cast<UInt>(x);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  Int value = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    value = checked_add(checked_mul(value, 10), negative ? -(ch - '0') : (ch - '0'));
  }
  return value;
}

Int abs(Int x) {
  if (x == kIntMin) throw std::overflow_error("abs of the minimum 128-bit value");
  return x < 0 ? -x : x;
}

Int gcd(Int x, Int y) {
  x = abs(x);
  y = abs(y);
  while (y != 0) {
    const Int r = x % y;
    x = y;
    y = r;
  }
  return x;
}

Int floor_div(Int x, Int m) {
  Int q = x / m;
  if ((x % m != 0) && ((x < 0) != (m < 0))) --q;
  return q;
}

Int mod(Int x, Int m) {
  const Int r = x % m;
  return r < 0 ? r + m : r;
}

Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  if (n < 2) return n;
  // Newton from above: 2^ceil(bits/2) >= sqrt(n).
  Int x = static_cast<Int>(1) << ((bit_length(static_cast<UInt>(n)) + 1) / 2);
  while (true) {
    const Int y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

std::optional<Int> exact_sqrt(Int n) {
  if (n < 0) return std::nullopt;
  // Quadratic-residue filters reject most non-squares before the Newton step.
  static constexpr std::array<bool, 64> kSquareMod64 = [] {
    std::array<bool, 64> t{};
    for (unsigned i = 0; i < 64; ++i) t[(i * i) % 64] = true;
    return t;
  }();
  static constexpr std::array<bool, 63> kSquareMod63 = [] {
    std::array<bool, 63> t{};
    for (unsigned i = 0; i < 63; ++i) t[(i * i) % 63] = true;
    return t;
  }();
  static constexpr std::array<bool, 65> kSquareMod65 = [] {
    std::array<bool, 65> t{};
    for (unsigned i = 0; i < 65; ++i) t[(i * i) % 65] = true;
    return t;
  }();
  if (!kSquareMod64[static_cast<unsigned>(n % 64)] || !kSquareMod63[static_cast<unsigned>(n % 63)] ||
      !kSquareMod65[static_cast<unsigned>(n % 65)])
    return std::nullopt;
  const Int r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

bool is_perfect_square(Int n) { return exact_sqrt(n).has_value(); }

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<UInt>(x) * y % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exponent != 0) {
    if (exponent & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t x, std::uint64_t m) {
  Int old_r = static_cast<Int>(x % m), r = static_cast<Int>(m);
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::domain_error("no inverse modulo " + std::to_string(m));
  return static_cast<std::uint64_t>(mod(old_s, static_cast<Int>(m)));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (const std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve prime bases are a complete witness set below 3.1 * 10^23.
  for (const std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n < 2) return 2;
  std::uint64_t c = n + 1;
  while (!is_prime(c)) {
    if (c == std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("no next prime in 64 bits");
    ++c;
  }
  return c;
}

Int Factorization::value() const {
  Int v = 1;
  for (const auto& [p, e] : entries) v = checked_mul(v, checked_pow(static_cast<Int>(p), e));
  return v;
}

std::uint64_t Factorization::divisor_count() const {
  std::uint64_t count = 1;
  for (const auto& pe : entries) count *= pe.exponent + 1;
  return count;
}

Factorization factorize(Int n) {
  if (n < 1) throw std::domain_error("factorize requires n >= 1, got " + to_string(n));
  std::uint64_t m = to_u64(n);
  Factorization out;
  auto take = [&](std::uint64_t d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e != 0) out.entries.push_back({d, e});
  };
  take(2);
  take(3);
  // 6k +- 1 wheel.
  for (std::uint64_t d = 5; d <= kTrialBound && d * d <= m; d += 6) {
    take(d);
    take(d + 2);
  }
  if (m == 1) return out;
  std::vector<std::uint64_t> rest;
  factor_into(m, rest);
  std::sort(rest.begin(), rest.end());
  for (const std::uint64_t p : rest) {
    if (!out.entries.empty() && out.entries.back().prime == p)
      ++out.entries.back().exponent;
    else
      out.entries.push_back({p, 1});
  }
  return out;
}

unsigned valuation(Int n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero is infinite");
  if (p < 2) throw std::domain_error("valuation base must be at least 2");
  unsigned v = 0;
  const Int q = static_cast<Int>(p);
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

int chi3(Int n) {
  switch (static_cast<int>(mod(n, 3))) {
    case 1:
      return 1;
    case 2:
      return -1;
    default:
      return 0;
  }
}

std::vector<std::uint64_t> divisors(Int n) {
  const Factorization f = factorize(n);
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f.entries) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::domain_error("euler_phi(0)");
  std::uint64_t phi = n;
  for (const auto& pe : factorize(n).entries) phi = phi / pe.prime * (pe.prime - 1);
  return phi;
}

std::vector<std::uint64_t> subgroup_closure(std::uint64_t modulus,
                                            std::span<const std::uint64_t> generators) {
  if (modulus == 0) throw std::invalid_argument("subgroup_closure: modulus must be positive");
  std::vector<std::uint64_t> gens;
  for (const std::uint64_t g : generators) {
    const std::uint64_t r = g % modulus;
    if (gcd_u64(r, modulus) != 1)
      throw std::invalid_argument("subgroup_closure: generator " + std::to_string(g) +
                                  " is not a unit mod " + std::to_string(modulus));
    gens.push_back(r);
  }
  std::vector<char> seen(modulus, 0);
  std::vector<std::uint64_t> members{1 % modulus};
  seen[1 % modulus] = 1;
  // Breadth-first: multiply every discovered element by every generator.
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const std::uint64_t g : gens) {
      const std::uint64_t next = mulmod(members[head], g, modulus);
      if (!seen[next]) {
        seen[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace cubictrace
