#pragma once

// Dense low-degree polynomials over F_p, coefficients stored low to high.
// Only what local analysis of cubics needs: division, gcd, modular powers and
// root finding.

#include <cstdint>
#include <span>
#include <vector>

#include "cubictrace/arith.hpp"

namespace cubictrace::fp {

class Poly {
 public:
  Poly() = default;
  Poly(std::vector<std::uint64_t> coeffs, std::uint64_t p);
  // Reduces signed integer coefficients into [0, p).
  static Poly from_ints(std::span<const Int> coeffs, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::uint64_t coeff(int i) const;
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  std::uint64_t eval(std::uint64_t x) const;
  Poly monic() const;
  Poly derivative() const;

  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  friend bool operator==(const Poly& x, const Poly& y) = default;

 private:
  void trim();

  std::vector<std::uint64_t> c_;
  std::uint64_t p_ = 2;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& num, const Poly& den);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& x, const Poly& y);
// base^exponent mod modulus.
Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus);

// Distinct roots in [0, p), ascending. Exhaustive evaluation for small p,
// gcd with x^p - x followed by deterministic equal-degree splitting above.
std::vector<std::uint64_t> roots(const Poly& f);
std::vector<std::uint64_t> roots_exhaustive(const Poly& f);

// Multiplicity of the root r in f (f nonzero).
unsigned root_multiplicity(const Poly& f, std::uint64_t r);

}  // namespace cubictrace::fp
