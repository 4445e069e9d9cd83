#pragma once

// Exhaustive enumeration of cyclic trace-one cubics, driven by the t
// coefficient a. For fixed a the discriminant is a concave quadratic in b,
// so the cyclic candidates live in one closed b-interval.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cubictrace/fields.hpp"
#include "cubictrace/poly.hpp"

namespace cubictrace {

/// Closed integer interval; empty when lo > hi.
struct BRange {
  Int lo = 1;
  Int hi = 0;

  bool empty() const { return lo > hi; }
  Int size() const { return empty() ? 0 : hi - lo + 1; }
};

/// Exactly the b with disc(t^3 - t^2 + at + b) > 0. The b-discriminant of
/// that quadratic is 16(1 - 3a)^3, so the range is empty for every a >= 0.
BRange b_range(Int a);

/// Cyclic members of t^3 - t^2 + at + b over b_range(a), ascending in b.
std::vector<TraceOnePoly> cyclic_polys_for_a(Int a);

struct ClassifiedPoly {
  TraceOnePoly poly;
  std::uint64_t conductor = 0;
};

std::vector<ClassifiedPoly> polys_for_a(Int a);

struct EnumerationRow {
  std::uint64_t norm = 0;     // N, with H^2 = c * N
  Int height_sq = 0;          // c * N
  std::optional<Int> a;       // (1 - cN)/3 when integral
  std::vector<TraceOnePoly> polys;  // ascending b
  std::uint64_t count = 0;
  std::uint64_t predicted = 0;  // ideal_count(N)
};

/// One row per N in 1..max_norm, including empty rows.
std::vector<EnumerationRow> enumerate_field(const FieldClass& field, std::uint64_t max_norm, unsigned threads = 1);

/// Members of the field with t coefficient a, ascending in b.
std::vector<TraceOnePoly> field_members_for_a(const FieldClass& field, Int a);

/// lambda_K = min H(f)^2 over the field's trace-one generators. Asserted to
/// equal the conductor.
Int min_height(const FieldClass& field);

/// Every cyclic trace-one cubic with a_min <= a <= 0, grouped by field and
/// sorted by (a, b) within each class.
std::map<FieldClass, std::vector<TraceOnePoly>> enumerate_all(Int a_min, unsigned threads = 1);

}  // namespace cubictrace
