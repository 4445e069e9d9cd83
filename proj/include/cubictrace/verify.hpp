#pragma once

// Verification harness: count identities against ideal counts in
// Q(sqrt(-3)), the sigma_0(P_1(.)) closed form audit, byte-exact table
// reproduction and the numeric quotient-norm check.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cubictrace/enumerate.hpp"
#include "json.hpp"

namespace cubictrace {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string note;  // empty unless the check carries a remark
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;

  bool overall() const;
  void add(std::string name, std::string expected, std::string actual, bool pass, std::string note = {});
  // Adds an exact-equality check.
  void expect_eq(std::string name, const std::string& expected, const std::string& actual);

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

/// Per-N comparison of enumerated counts with series_coeff(N), N = 1..max_norm.
VerificationReport verify_theorem(const FieldClass& field, std::uint64_t max_norm, unsigned threads = 1);

/// Per-a check for a in [a_min, 0]: count is 0 unless c | 1 - 3a, and then
/// equals ideal_count((1 - 3a)/c).
VerificationReport verify_corollary(const FieldClass& field, Int a_min);

/// Compares enumerated counts with formula3_count(N) at every N <= max_norm
/// with integral a. Disagreement is accepted, and noted, exactly when the
/// 2-mod-3 part of N is not a square and the count equals ideal_count(N).
VerificationReport verify_formula3(const FieldClass& field, std::uint64_t max_norm, unsigned threads = 1);

struct Divergence {
  std::uint64_t norm = 0;
  std::uint64_t formula = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t ideal = 0;
};
std::vector<Divergence> formula3_divergences(const FieldClass& field, std::uint64_t max_norm, unsigned threads = 1);

/// Regenerates the K_49 and K_169 height tables and the d_N table and
/// compares them byte for byte with the embedded reference text.
VerificationReport reproduce_tables();

/// "H^2 | f, ..." table of the nonzero rows, polynomials within a row in
/// descending b.
std::string render_height_table(const FieldClass& field, const std::vector<EnumerationRow>& rows);
/// Two-line "N|...", "d_N|..." table over N = 1 mod 3, N <= max_n, d_N > 0.
std::string render_zeta_table(std::uint64_t max_n);

const std::string& reference_table_k49();
const std::string& reference_table_k169();
const std::string& reference_zeta_table();

/// The three real roots of a cyclic f, ascending, to within 1e-12 relative.
std::array<long double, 3> real_roots(const TraceOnePoly& f);

/// |sum x_i^2 - (sum x_i)^2 / 3 - (2/3) H^2| < tolerance over the real roots.
VerificationReport norm_proportionality_check(const TraceOnePoly& f, double tolerance = 1e-9);

}  // namespace cubictrace
