#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cubictrace/arith.hpp"

namespace cubictrace {

/// The trace-one cubic t^3 - t^2 + a*t + b.
///
/// Only this normalized family is representable: the leading coefficient is
/// fixed at 1 and the t^2 coefficient at -1, so the roots sum to one.
struct TraceOnePoly {
  Int a = 0;
  Int b = 0;

  /// Coefficients low to high: {b, a, -1, 1}.
  std::array<Int, 4> coefficients() const { return {b, a, -1, 1}; }
  /// Canonical form "t^3 - t^2 - 2t + 1"; zero terms are omitted.
  std::string to_string() const;

  friend auto operator<=>(const TraceOnePoly&, const TraceOnePoly&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts "t^3 - t^2 - 2t + 1" style input (spaces optional, "2*t" allowed,
/// absent t and constant terms read as zero) or the bare pair "a,b".
TraceOnePoly parse_poly(std::string_view text);

/// f(x), exact.
Int evaluate(const TraceOnePoly& f, Int x);

/// a^2 - 4a^3 - 18ab + 4b - 27b^2, the discriminant of t^3 - t^2 + at + b.
Int discriminant(const TraceOnePoly& f);

/// No integer root. A monic integral cubic is reducible over Q exactly when
/// it has an integer root, and such a root divides b.
bool is_irreducible(const TraceOnePoly& f);

/// Irreducible with positive square discriminant (Galois group Z/3).
bool is_cyclic(const TraceOnePoly& f);

/// H(f)^2 = 1 - 3a. Throws std::domain_error for a > 0.
Int height_sq(const TraceOnePoly& f);

}  // namespace cubictrace
