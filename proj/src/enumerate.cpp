#include "cubictrace/enumerate.hpp"

#include <algorithm>
#include <string>

#include "cubictrace/eisenstein.hpp"
#include "parallel.hpp"

namespace cubictrace {

namespace {

constexpr std::uint64_t kMinHeightSearchLimit = 64;

// disc(a, b) as a quadratic in b: -27 b^2 + (4 - 18a) b + (a^2 - 4a^3).
Int disc_at(Int a, Int b) { return discriminant(TraceOnePoly{a, b}); }

std::optional<Int> integral_a(std::uint64_t c, std::uint64_t n) {
  const Int num = checked_sub(1, checked_mul(static_cast<Int>(c), static_cast<Int>(n)));
  if (mod(num, 3) != 0) return std::nullopt;
  return num / 3;
}

}  // namespace

BRange b_range(Int a) {
  // For a > 0 the b-discriminant 16(1 - 3a)^3 is negative. At a = 0 the only
  // nonnegative value is disc(0, 0) = 0, which the vertex test below rejects.
  if (a > 0) return {};
  const Int h2 = checked_sub(1, checked_mul(3, a));
  const Int linear = checked_sub(4, checked_mul(18, a));
  // Vertex at linear / 54; the integer maximum is at its floor or ceiling.
  const Int v = floor_div(linear, 54);
  Int best = disc_at(a, v) >= disc_at(a, v + 1) ? v : v + 1;
  if (disc_at(a, best) <= 0) return {};
  // Real roots (linear -+ sqrt(16 h2^3)) / 54, rounded toward the vertex and
  // then corrected by exact evaluation.
  const Int s = isqrt(checked_mul(16, checked_pow(h2, 3)));
  Int hi = std::max(best, floor_div(checked_add(linear, s), 54));
  Int lo = std::min(best, floor_div(checked_sub(linear, s), 54) + 1);
  while (hi > best && disc_at(a, hi) <= 0) --hi;
  while (disc_at(a, hi + 1) > 0) ++hi;
  while (lo < best && disc_at(a, lo) <= 0) ++lo;
  while (disc_at(a, lo - 1) > 0) --lo;
  return {lo, hi};
}

std::vector<TraceOnePoly> cyclic_polys_for_a(Int a) {
  const BRange range = b_range(a);
  std::vector<TraceOnePoly> out;
  if (range.empty()) return out;
  // disc(b + 1) - disc(b) = (4 - 18a) - 27(2b + 1). Endpoint values were
  // computed with overflow checks and the quadratic is bounded by its vertex,
  // so the running value stays in range.
  const Int linear = checked_sub(4, checked_mul(18, a));
  Int d = disc_at(a, range.lo);
  for (Int b = range.lo; b <= range.hi; ++b) {
    if (is_perfect_square(d)) {
      const TraceOnePoly f{a, b};
      if (is_irreducible(f)) out.push_back(f);
    }
    d += linear - 27 * (2 * b + 1);
  }
  return out;
}

std::vector<ClassifiedPoly> polys_for_a(Int a) {
  std::vector<ClassifiedPoly> out;
  for (const TraceOnePoly& f : cyclic_polys_for_a(a)) out.push_back({f, conductor(f)});
  return out;
}

std::vector<TraceOnePoly> field_members_for_a(const FieldClass& field, Int a) {
  std::vector<TraceOnePoly> out;
  const std::uint64_t c = field.conductor;
  for (const TraceOnePoly& f : cyclic_polys_for_a(a))
    if (conductor(f) == c && splitting_subgroup(f, c) == field.splitting_subgroup) out.push_back(f);
  return out;
}

std::vector<EnumerationRow> enumerate_field(const FieldClass& field, std::uint64_t max_norm, unsigned threads) {
  if (max_norm == 0) throw std::invalid_argument("max_norm must be at least 1");
  std::vector<EnumerationRow> rows(max_norm);
  detail::parallel_for(max_norm, threads, [&](std::size_t i) {
    EnumerationRow& row = rows[i];
    row.norm = i + 1;
    row.height_sq = checked_mul(static_cast<Int>(field.conductor), static_cast<Int>(row.norm));
    row.a = integral_a(field.conductor, row.norm);
    row.predicted = ideal_count(row.norm);
    if (row.a) row.polys = field_members_for_a(field, *row.a);
    row.count = row.polys.size();
  });
  return rows;
}

Int min_height(const FieldClass& field) {
  for (std::uint64_t n = 1; n <= kMinHeightSearchLimit; ++n) {
    const auto a = integral_a(field.conductor, n);
    if (!a || field_members_for_a(field, *a).empty()) continue;
    const Int h2 = checked_mul(static_cast<Int>(field.conductor), static_cast<Int>(n));
    if (h2 != static_cast<Int>(field.conductor))
      throw InconsistencyError("minimal height^2 " + to_string(h2) + " differs from conductor " +
                               std::to_string(field.conductor));
    return h2;
  }
  throw std::runtime_error("no generator found up to N = " + std::to_string(kMinHeightSearchLimit) +
                           " for conductor " + std::to_string(field.conductor));
}

std::map<FieldClass, std::vector<TraceOnePoly>> enumerate_all(Int a_min, unsigned threads) {
  std::map<FieldClass, std::vector<TraceOnePoly>> out;
  if (a_min > 0) throw std::invalid_argument("a_min must be <= 0");
  const std::size_t n = static_cast<std::size_t>(to_u64(1 - a_min));
  std::vector<std::vector<std::pair<FieldKey, TraceOnePoly>>> per_a(n);
  detail::parallel_for(n, threads, [&](std::size_t i) {
    const Int a = a_min + static_cast<Int>(i);
    for (const TraceOnePoly& f : cyclic_polys_for_a(a)) per_a[i].emplace_back(field_key(f), f);
  });

  std::map<FieldKey, std::vector<TraceOnePoly>> grouped;
  for (const auto& bucket : per_a)
    for (const auto& [key, f] : bucket) grouped[key].push_back(f);

  for (auto& [key, members] : grouped) {
    const Int a0 = (1 - static_cast<Int>(key.conductor)) / 3;
    std::vector<TraceOnePoly> lowest;
    for (const TraceOnePoly& f : members)
      if (f.a == a0) lowest.push_back(f);
    FieldClass field;
    if (a0 >= a_min && !lowest.empty()) {
      field.conductor = key.conductor;
      field.discriminant = checked_mul(key.conductor, key.conductor);
      field.splitting_subgroup = key.subgroup;
      field.canonical_poly = pick_canonical(lowest);
    } else {
      field = field_class(key);
    }
    out.emplace(std::move(field), std::move(members));
  }
  return out;
}

}  // namespace cubictrace
