#include "cubictrace/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubictrace::fp {

namespace {

constexpr std::uint64_t kExhaustiveBelow = 64;

std::uint64_t add_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  const std::uint64_t s = x + y;
  return (s >= p || s < x) ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return x >= y ? x - y : x + (p - y);
}

void check_same_field(const Poly& x, const Poly& y) {
  if (x.modulus() != y.modulus()) throw std::invalid_argument("polynomials over different prime fields");
}

// f is squarefree and splits into distinct linear factors over F_p, p odd.
void split_linear(const Poly& f, std::vector<std::uint64_t>& out) {
  const std::uint64_t p = f.modulus();
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    const Poly m = f.monic();
    out.push_back(sub_mod(0, m.coeff(0), p));
    return;
  }
  for (std::uint64_t delta = 0; delta < p; ++delta) {
    const Poly shifted({delta, 1}, p);
    const Poly t = powmod(shifted, (p - 1) / 2, f) - Poly({1}, p);
    const Poly h = gcd(f, t);
    if (h.degree() > 0 && h.degree() < f.degree()) {
      split_linear(h, out);
      split_linear(divmod(f, h).quotient, out);
      return;
    }
  }
  throw std::logic_error("equal-degree splitting failed");
}

}  // namespace

Poly::Poly(std::vector<std::uint64_t> coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
  if (p < 2) throw std::invalid_argument("field characteristic must be at least 2");
  for (auto& x : c_) x %= p_;
  trim();
}

Poly Poly::from_ints(std::span<const Int> coeffs, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(coeffs.size());
  for (const Int x : coeffs) c.push_back(static_cast<std::uint64_t>(mod(x, static_cast<Int>(p))));
  return Poly(std::move(c), p);
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t Poly::coeff(int i) const {
  return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
}

std::uint64_t Poly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= p_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(mulmod(acc, x, p_), *it, p_);
  return acc;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  const std::uint64_t inv = invmod(c_.back(), p_);
  std::vector<std::uint64_t> c = c_;
  for (auto& x : c) x = mulmod(x, inv, p_);
  return Poly(std::move(c), p_);
}

Poly Poly::derivative() const {
  std::vector<std::uint64_t> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(mulmod(c_[i], i % p_, p_));
  return Poly(std::move(c), p_);
}

Poly operator+(const Poly& x, const Poly& y) {
  check_same_field(x, y);
  std::vector<std::uint64_t> c(std::max(x.c_.size(), y.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = add_mod(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)), x.p_);
  return Poly(std::move(c), x.p_);
}

Poly operator-(const Poly& x, const Poly& y) {
  check_same_field(x, y);
  std::vector<std::uint64_t> c(std::max(x.c_.size(), y.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = sub_mod(x.coeff(static_cast<int>(i)), y.coeff(static_cast<int>(i)), x.p_);
  return Poly(std::move(c), x.p_);
}

Poly operator*(const Poly& x, const Poly& y) {
  check_same_field(x, y);
  if (x.is_zero() || y.is_zero()) return Poly({}, x.p_);
  std::vector<std::uint64_t> c(x.c_.size() + y.c_.size() - 1, 0);
  for (std::size_t i = 0; i < x.c_.size(); ++i)
    for (std::size_t j = 0; j < y.c_.size(); ++j)
      c[i + j] = add_mod(c[i + j], mulmod(x.c_[i], y.c_[j], x.p_), x.p_);
  return Poly(std::move(c), x.p_);
}

DivMod divmod(const Poly& num, const Poly& den) {
  check_same_field(num, den);
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::uint64_t p = num.modulus();
  std::vector<std::uint64_t> r = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {Poly({}, p), num};
  std::vector<std::uint64_t> q(static_cast<std::size_t>(num.degree() - dd + 1), 0);
  const std::uint64_t inv = invmod(den.lead(), p);
  for (int i = num.degree(); i >= dd; --i) {
    const std::uint64_t t = mulmod(r[static_cast<std::size_t>(i)], inv, p);
    q[static_cast<std::size_t>(i - dd)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - dd + j)];
      slot = sub_mod(slot, mulmod(t, den.coeff(j), p), p);
    }
  }
  return {Poly(std::move(q), p), Poly(std::move(r), p)};
}

Poly gcd(const Poly& x, const Poly& y) {
  Poly a = x;
  Poly b = y;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus) {
  Poly result = divmod(Poly({1}, base.modulus()), modulus).remainder;
  Poly b = divmod(base, modulus).remainder;
  while (exponent != 0) {
    if (exponent & 1) result = divmod(result * b, modulus).remainder;
    b = divmod(b * b, modulus).remainder;
    exponent >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> roots_exhaustive(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("every residue is a root of the zero polynomial");
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < f.modulus(); ++r)
    if (f.eval(r) == 0) out.push_back(r);
  return out;
}

std::vector<std::uint64_t> roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("every residue is a root of the zero polynomial");
  const std::uint64_t p = f.modulus();
  if (p < kExhaustiveBelow) return roots_exhaustive(f);
  const Poly x({0, 1}, p);
  const Poly split_part = gcd(f, powmod(x, p, f) - x);
  std::vector<std::uint64_t> out;
  split_linear(split_part, out);
  std::sort(out.begin(), out.end());
  return out;
}

unsigned root_multiplicity(const Poly& f, std::uint64_t r) {
  if (f.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  const std::uint64_t p = f.modulus();
  const Poly linear({sub_mod(0, r % p, p), 1}, p);
  unsigned m = 0;
  Poly g = f;
  while (true) {
    DivMod qr = divmod(g, linear);
    if (!qr.remainder.is_zero()) return m;
    ++m;
    g = std::move(qr.quotient);
  }
}

}  // namespace cubictrace::fp
