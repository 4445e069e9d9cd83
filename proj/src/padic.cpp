#include "cubictrace/padic.hpp"

#include <array>
#include <limits>
#include <string>

namespace cubictrace {

namespace {

using Coeffs = std::array<UInt, 4>;

UInt addmod(UInt x, UInt y, UInt m) {
  const UInt s = x + y;
  return s >= m ? s - m : s;
}

// x, y < m < 2^127.
UInt mulmod_wide(UInt x, UInt y, UInt m) {
  if (m <= std::numeric_limits<std::uint64_t>::max()) return x * y % m;
  UInt r = 0;
  for (int bit = 127; bit >= 0; --bit) {
    r = addmod(r, r, m);
    if ((y >> bit) & 1) r = addmod(r, x, m);
  }
  return r;
}

UInt reduce(Int x, UInt m) {
  const Int mm = static_cast<Int>(m);
  return static_cast<UInt>(mod(x, mm));
}

unsigned capped_valuation(UInt x, std::uint64_t p, unsigned cap) {
  unsigned v = 0;
  while (v < cap && x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return x == 0 ? cap : v;
}

UInt power(std::uint64_t p, unsigned k) {
  try {
    return static_cast<UInt>(checked_pow(static_cast<Int>(p), k));
  } catch (const std::overflow_error&) {
    throw std::overflow_error("p-adic working precision " + std::to_string(p) + "^" + std::to_string(k) +
                              " exceeds 127 bits");
  }
}

// g(r + p*y) modulo `modulus`, by Taylor expansion.
Coeffs shift_scale(const Coeffs& g, UInt r, std::uint64_t p, UInt modulus) {
  static constexpr unsigned kBinom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  std::array<UInt, 4> r_pow{1 % modulus, r % modulus, 0, 0};
  r_pow[2] = mulmod_wide(r_pow[1], r_pow[1], modulus);
  r_pow[3] = mulmod_wide(r_pow[2], r_pow[1], modulus);
  Coeffs h{};
  UInt p_pow = 1 % modulus;
  for (unsigned j = 0; j < 4; ++j) {
    UInt acc = 0;
    for (unsigned i = j; i < 4; ++i) {
      const UInt term = mulmod_wide(g[i] % modulus, r_pow[i - j], modulus);
      acc = addmod(acc, mulmod_wide(term, kBinom[i][j] % modulus, modulus), modulus);
    }
    h[j] = mulmod_wide(acc, p_pow, modulus);
    p_pow = mulmod_wide(p_pow, p % modulus, modulus);
  }
  return h;
}

// Is there a point y (in Z_p, or in W when `unramified`) with g(y) = 0 mod
// p^precision? Coefficients of g are integers known modulo p^precision.
bool class_has_root(Coeffs g, unsigned precision, std::uint64_t p, bool unramified) {
  if (precision == 0) return true;
  UInt modulus = power(p, precision);
  unsigned v = precision;
  for (auto& c : g) {
    c %= modulus;
    v = std::min(v, capped_valuation(c, p, precision));
  }
  if (v >= precision) return true;
  const UInt pv = power(p, v);
  precision -= v;
  modulus = power(p, precision);
  for (auto& c : g) c = (c / pv) % modulus;

  std::vector<std::uint64_t> reduced;
  for (const UInt c : g) reduced.push_back(static_cast<std::uint64_t>(c % p));
  const fp::Poly gbar(std::move(reduced), p);
  if (gbar.degree() <= 0) return false;

  const std::vector<std::uint64_t> rs = fp::roots(gbar);
  const fp::Poly dg = gbar.derivative();
  for (const std::uint64_t r : rs)
    if (dg.eval(r) != 0) return true;  // simple root: Hensel
  // An irreducible cubic over F_p has three simple roots in F_{p^3}. Repeated
  // roots of a cubic over F_p always lie in F_p, so every remaining branch
  // stays inside Z_p.
  if (unramified && gbar.degree() == 3 && rs.empty()) return true;

  for (const std::uint64_t r : rs) {
    if (class_has_root(shift_scale(g, r, p, modulus), precision, p, unramified)) return true;
  }
  return false;
}

bool lift(const TraceOnePoly& f, std::uint64_t p, unsigned d, bool unramified) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const unsigned precision = 2 * d + 1;
  const UInt modulus = power(p, precision);
  const auto c = f.coefficients();
  const Coeffs g{reduce(c[0], modulus), reduce(c[1], modulus), reduce(c[2], modulus), reduce(c[3], modulus)};
  return class_has_root(g, precision, p, unramified);
}

unsigned disc_valuation(const TraceOnePoly& f, std::uint64_t p) {
  const Int disc = discriminant(f);
  if (disc == 0) throw std::domain_error("discriminant of " + f.to_string() + " is zero");
  return valuation(disc, p);
}

std::vector<Int> lift_to_ints(const fp::Poly& x) {
  std::vector<Int> out;
  for (const std::uint64_t c : x.coeffs()) out.push_back(static_cast<Int>(c));
  return out;
}

std::vector<Int> mul_ints(const std::vector<Int>& x, const std::vector<Int>& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<Int> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(x[i], y[j]));
  return out;
}

}  // namespace

std::string_view to_string(SplittingType t) {
  switch (t) {
    case SplittingType::Split:
      return "split";
    case SplittingType::Inert:
      return "inert";
    case SplittingType::Ramified:
      return "ramified";
  }
  return "?";
}

std::vector<std::uint64_t> roots_mod_p(const TraceOnePoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const auto c = f.coefficients();
  return fp::roots(fp::Poly::from_ints(c, p));
}

bool lift_root_zp(const TraceOnePoly& f, std::uint64_t p, unsigned d) { return lift(f, p, d, false); }

bool lift_root_zp(const TraceOnePoly& f, std::uint64_t p) { return lift(f, p, disc_valuation(f, p), false); }

bool lift_root_unramified(const TraceOnePoly& f, std::uint64_t p) {
  return lift(f, p, disc_valuation(f, p), true);
}

SplittingType splitting_type(const TraceOnePoly& f, std::uint64_t p) {
  const unsigned d = disc_valuation(f, p);
  SplittingType result;
  if (d == 0) {
    const std::size_t n = roots_mod_p(f, p).size();
    if (n == 3)
      result = SplittingType::Split;
    else if (n == 0)
      result = SplittingType::Inert;
    else
      throw InconsistencyError(f.to_string() + " has " + std::to_string(n) + " roots mod " + std::to_string(p) +
                               " at an unramified prime; the input is not cyclic");
  } else if (lift(f, p, d, false)) {
    result = SplittingType::Split;
  } else if (lift(f, p, d, true)) {
    result = SplittingType::Inert;
  } else {
    result = SplittingType::Ramified;
  }
  if (p == 3 && result == SplittingType::Ramified)
    throw InconsistencyError("3 ramifies for trace-one " + f.to_string() + "; trace-one generators are tame");
  return result;
}

bool dedekind_index_test(const TraceOnePoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const auto c = f.coefficients();
  const fp::Poly fbar = fp::Poly::from_ints(c, p);
  fp::Poly g({1}, p);
  fp::Poly h({1}, p);
  fp::Poly residual = fbar;
  for (const std::uint64_t r : fp::roots(fbar)) {
    const fp::Poly linear({(p - r) % p, 1}, p);
    const unsigned e = fp::root_multiplicity(fbar, r);
    g = g * linear;
    for (unsigned i = 0; i < e; ++i) {
      if (i + 1 < e) h = h * linear;
      residual = fp::divmod(residual, linear).quotient;
    }
  }
  // What is left has no roots and degree <= 3, hence is 1 or irreducible.
  g = g * residual;

  std::vector<Int> diff = mul_ints(lift_to_ints(g), lift_to_ints(h));
  diff.resize(4, 0);
  const Int q = static_cast<Int>(p);
  std::vector<Int> t;
  for (std::size_t i = 0; i < 4; ++i) {
    const Int di = checked_sub(diff[i], c[i]);
    if (di % q != 0) throw std::logic_error("g*h does not reduce to f modulo p");
    t.push_back(di / q);
  }
  const fp::Poly tbar = fp::Poly::from_ints(t, p);
  return fp::gcd(fp::gcd(tbar, g), h).degree() > 0;
}

fp::Poly least_irreducible_cubic(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  for (std::uint64_t c2 = 0; c2 < p; ++c2)
    for (std::uint64_t c1 = 0; c1 < p; ++c1)
      for (std::uint64_t c0 = 1; c0 < p; ++c0) {
        fp::Poly g({c0, c1, c2, 1}, p);
        if (fp::roots(g).empty()) return g;
      }
  throw std::logic_error("no irreducible cubic found");
}

}  // namespace cubictrace
