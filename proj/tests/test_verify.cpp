#include <cmath>
#include <sstream>

#include "cubictrace/eisenstein.hpp"
#include "cubictrace/verify.hpp"
#include "doctest.h"

using namespace cubictrace;

namespace {

const FieldClass& k49() {
  static const FieldClass field = field_invariants({-2, 1});
  return field;
}
const FieldClass& k169() {
  static const FieldClass field = field_invariants({-4, -1});
  return field;
}

std::vector<std::uint64_t> divergence_norms(const FieldClass& field, std::uint64_t max_norm) {
  std::vector<std::uint64_t> out;
  for (const Divergence& d : formula3_divergences(field, max_norm)) out.push_back(d.norm);
  return out;
}

}  // namespace

TEST_CASE("theorem identity on the table fields") {
  for (const FieldClass* field : {&k49(), &k169()}) {
    const VerificationReport report = verify_theorem(*field, 43);
    CHECK(report.overall());
    CHECK(report.checks.size() == 43);
    std::vector<std::uint64_t> nonzero, values;
    for (const EnumerationRow& row : enumerate_field(*field, 43))
      if (row.count) {
        nonzero.push_back(row.norm);
        values.push_back(row.count);
      }
    CHECK(nonzero == std::vector<std::uint64_t>{1, 4, 7, 13, 16, 19, 25, 28, 31, 37, 43});
    CHECK(values == std::vector<std::uint64_t>{1, 1, 2, 2, 1, 2, 1, 2, 2, 2, 2});
  }
  const VerificationReport small = verify_theorem(k49(), 3);
  CHECK(small.overall());
  CHECK(small.checks[0].actual == "1");
  CHECK(small.checks[1].actual == "0");
  CHECK(small.checks[2].actual == "0");
}

TEST_CASE("per-a counts") {
  const VerificationReport r = verify_corollary(k49(), -100);
  CHECK(r.overall());
  CHECK(r.checks.size() == 101);
  const VerificationReport zero = verify_corollary(k49(), 0);
  REQUIRE(zero.checks.size() == 1);
  CHECK(zero.checks[0].actual == "0");
  CHECK(zero.checks[0].note == "c does not divide 1 - 3a");
  const VerificationReport r169 = verify_corollary(k169(), -56);
  CHECK(r169.overall());
  CHECK(r169.checks.back().name == "a=-56");
  CHECK(r169.checks.back().actual == "2");
  CHECK(r169.checks.back().note == "N=13");
}

TEST_CASE("sigma_0(P_1) audit") {
  CHECK(divergence_norms(k49(), 9).empty());
  CHECK(divergence_norms(k49(), 10) == std::vector<std::uint64_t>{10});
  CHECK(divergence_norms(k49(), 22) == std::vector<std::uint64_t>{10, 22});
  const auto d = formula3_divergences(k49(), 10);
  CHECK(d[0].formula == 1);
  CHECK(d[0].enumerated == 0);
  CHECK(d[0].ideal == 0);
  const VerificationReport r = verify_formula3(k49(), 22);
  CHECK(r.overall());
  CHECK(r.checks.size() == 8);  // N = 1, 4, ..., 22
  for (const Check& c : r.checks)
    CHECK((c.note.empty() == (c.name != "N=10" && c.name != "N=22")));
  CHECK(verify_formula3(k169(), 100).overall());
}

TEST_CASE("reference tables") {
  const VerificationReport r = reproduce_tables();
  CHECK(r.overall());
  CHECK(render_height_table(k49(), enumerate_field(k49(), 43)) == reference_table_k49());
  CHECK(render_height_table(k169(), enumerate_field(k169(), 43)) == reference_table_k169());
  CHECK(render_zeta_table(97) == reference_zeta_table());
  // Within a row, larger b comes first.
  CHECK(reference_table_k49().find("7 x 7 | t^3 - t^2 - 16t + 29, t^3 - t^2 - 16t - 13\n") != std::string::npos);
}

TEST_CASE("report serialization is deterministic") {
  const auto a = verify_theorem(k169(), 30, 1).to_json().dump();
  const auto b = verify_theorem(k169(), 30, 6).to_json().dump();
  CHECK(a == b);
  CHECK(verify_corollary(k49(), -40).to_text() == verify_corollary(k49(), -40).to_text());
  const auto j = verify_theorem(k49(), 2).to_json();
  CHECK(j["schema_version"] == 1);
  CHECK(j["overall"] == true);
  CHECK(j["checks"].size() == 2);
}

TEST_CASE("a failing check fails the report") {
  VerificationReport r;
  r.subject = "x";
  r.expect_eq("same", "1", "1");
  CHECK(r.overall());
  r.expect_eq("different", "1", "2");
  CHECK_FALSE(r.overall());
  CHECK(r.to_text().find("[FAIL] different: expected 1, actual 2") != std::string::npos);
}

TEST_CASE("numeric roots and the quotient norm") {
  const auto roots = real_roots({-2, 1});
  // Roots of t^3 - t^2 - 2t + 1 are 2 cos(2 pi k / 7) shifted; check residuals.
  for (const long double x : roots) CHECK(std::fabs(((x - 1) * x - 2) * x + 1) < 1e-12L);
  CHECK(roots[0] < roots[1]);
  CHECK(roots[1] < roots[2]);
  CHECK(norm_proportionality_check({-2, 1}).overall());
  CHECK(norm_proportionality_check({-4, -1}).overall());
  CHECK(norm_proportionality_check({-30, 43}).overall());
  CHECK_THROWS_AS(real_roots({0, 1}), std::invalid_argument);
  // A large height still certifies.
  CHECK(norm_proportionality_check({-186, 961}).overall());
}
