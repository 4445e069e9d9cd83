#include <set>

#include "cubictrace/eisenstein.hpp"
#include "cubictrace/enumerate.hpp"
#include "doctest.h"

using namespace cubictrace;

namespace {

std::vector<std::uint64_t> counts(const std::vector<EnumerationRow>& rows) {
  std::vector<std::uint64_t> out;
  for (const auto& row : rows) out.push_back(row.count);
  return out;
}

}  // namespace

TEST_CASE("b range examples") {
  const BRange r = b_range(-2);
  CHECK(r.lo == 0);
  CHECK(r.hi == 2);
  CHECK(b_range(0).empty());
  CHECK(b_range(5).empty());
  const BRange r16 = b_range(-16);
  CHECK(r16.lo <= -13);
  CHECK(r16.hi >= 29);
}

TEST_CASE("b range is exactly the positive-discriminant set") {
  for (Int a = 3; a >= -400; --a) {
    const BRange r = b_range(a);
    // A window comfortably wider than any root of the quadratic.
    const Int w = 10 + isqrt(checked_pow(1 - 3 * (a < 0 ? a : 0), 3));
    for (Int b = -w; b <= w; ++b) {
      const bool positive = discriminant({a, b}) > 0;
      REQUIRE(positive == (!r.empty() && r.lo <= b && b <= r.hi));
    }
  }
}

TEST_CASE("positive a gives nothing") {
  // The b-discriminant of disc(a, .) is 16 (1 - 3a)^3 < 0 for a > 0.
  for (Int a = 1; a <= 2000; ++a) REQUIRE(b_range(a).empty());
  for (Int a = 1; a <= 30; ++a)
    for (Int b = -5000; b <= 5000; ++b) REQUIRE(discriminant({a, b}) <= 0);
}

TEST_CASE("polynomials for fixed a") {
  const auto two = polys_for_a(-2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].poly == TraceOnePoly{-2, 1});
  CHECK(two[0].conductor == 7);
  CHECK(polys_for_a(-1).empty());

  const auto thirty = polys_for_a(-30);
  REQUIRE(thirty.size() == 6);
  std::multiset<std::uint64_t> conductors;
  for (const auto& [f, c] : thirty) conductors.insert(c);
  CHECK(conductors == std::multiset<std::uint64_t>{7, 7, 13, 13, 91, 91});
}

TEST_CASE("enumerate_field examples") {
  const FieldClass k49 = field_invariants({-2, 1});
  const FieldClass k169 = field_invariants({-4, -1});
  CHECK(counts(enumerate_field(k49, 13)) == std::vector<std::uint64_t>{1, 0, 0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 2});
  CHECK(enumerate_field(k49, 10).back().count == 0);
  CHECK(enumerate_field(k49, 10).back().a == -23);
  const auto rows = enumerate_field(k169, 7);
  CHECK(rows.back().polys == std::vector<TraceOnePoly>{{-30, -53}, {-30, 25}});
  CHECK(rows.back().height_sq == 91);
  CHECK_THROWS_AS(enumerate_field(k49, 0), std::invalid_argument);
}

TEST_CASE("rows off the 1 mod 3 line are empty with no integral a") {
  const FieldClass k49 = field_invariants({-2, 1});
  for (const auto& row : enumerate_field(k49, 60)) {
    if (row.norm % 3 == 1) {
      REQUIRE(row.a.has_value());
      REQUIRE(row.count == ideal_count(row.norm));
    } else {
      REQUIRE_FALSE(row.a.has_value());
      REQUIRE(row.count == 0);
    }
    REQUIRE(row.count == series_coeff(row.norm));
    REQUIRE(row.predicted == ideal_count(row.norm));
  }
}

TEST_CASE("output does not depend on the worker count") {
  const FieldClass k169 = field_invariants({-4, -1});
  const auto one = enumerate_field(k169, 40, 1);
  const auto many = enumerate_field(k169, 40, 8);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    REQUIRE(one[i].polys == many[i].polys);
    REQUIRE(one[i].a == many[i].a);
  }
  const auto all1 = enumerate_all(-300, 1);
  const auto all8 = enumerate_all(-300, 8);
  CHECK(all1 == all8);
}

TEST_CASE("minimal height") {
  CHECK(min_height(field_invariants({-2, 1})) == 7);
  CHECK(min_height(field_invariants({-4, -1})) == 13);
  for (const auto& [f, c] : polys_for_a(-30))
    if (c == 91) CHECK(min_height(field_invariants(f)) == 91);
}

TEST_CASE("enumerate_all examples") {
  const auto two = enumerate_all(-2);
  REQUIRE(two.size() == 1);
  CHECK(two.begin()->first.conductor == 7);
  CHECK(two.begin()->second == std::vector<TraceOnePoly>{{-2, 1}});
  CHECK(enumerate_all(0).empty());
  CHECK_THROWS_AS(enumerate_all(1), std::invalid_argument);

  const auto thirty = enumerate_all(-30);
  std::size_t c91 = 0;
  for (const auto& [field, members] : thirty) {
    c91 += field.conductor == 91;
    if (field.conductor == 7) {
      std::set<Int> as;
      for (const auto& f : members) as.insert(f.a);
      CHECK(as == std::set<Int>{-30, -16, -9, -2});
    }
  }
  CHECK(c91 == 2);
}

TEST_CASE("partition and divisibility over a >= -600") {
  const auto all = enumerate_all(-600, 4);
  std::map<Int, std::size_t> per_a;
  for (const auto& [field, members] : all) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const TraceOnePoly& f = members[i];
      REQUIRE((1 - 3 * f.a) % static_cast<Int>(field.conductor) == 0);
      if (i) REQUIRE(members[i - 1] < f);
      ++per_a[f.a];
    }
    REQUIRE(field.canonical_poly.a == (1 - static_cast<Int>(field.conductor)) / 3);
    REQUIRE(field_key(field.canonical_poly) == field.key());
  }
  for (Int a = -600; a <= 0; ++a) REQUIRE(per_a[a] == cyclic_polys_for_a(a).size());
}
