#include "cubictrace/verify.hpp"

#include <cmath>
#include <sstream>

#include "cubictrace/eisenstein.hpp"

namespace cubictrace {

namespace {

std::string str(std::uint64_t x) { return std::to_string(x); }

// Reference tables: polynomials with root field K_49 = Q(zeta_7)^+ and K_169,
// listed by H(f)^2 = c * N, and the ideal counts d_N for N = 1 mod 3 up to 97.
const std::string kTableK49 =
    "H(f)^2 | f: K_f = K_49\n"
    "7 x 1 | t^3 - t^2 - 2t + 1\n"
    "7 x 4 | t^3 - t^2 - 9t + 1\n"
    "7 x 7 | t^3 - t^2 - 16t + 29, t^3 - t^2 - 16t - 13\n"
    "7 x 13 | t^3 - t^2 - 30t + 43, t^3 - t^2 - 30t - 41\n"
    "7 x 16 | t^3 - t^2 - 37t + 29\n"
    "7 x 19 | t^3 - t^2 - 44t + 127, t^3 - t^2 - 44t - 83\n"
    "7 x 25 | t^3 - t^2 - 58t - 13\n"
    "7 x 28 | t^3 - t^2 - 65t + 169, t^3 - t^2 - 65t - 167\n"
    "7 x 31 | t^3 - t^2 - 72t + 169, t^3 - t^2 - 72t - 41\n"
    "7 x 37 | t^3 - t^2 - 86t + 337, t^3 - t^2 - 86t - 251\n"
    "7 x 43 | t^3 - t^2 - 100t + 113, t^3 - t^2 - 100t - 181\n";

const std::string kTableK169 =
    "H(f)^2 | f: K_f = K_169\n"
    "13 x 1 | t^3 - t^2 - 4t - 1\n"
    "13 x 4 | t^3 - t^2 - 17t + 25\n"
    "13 x 7 | t^3 - t^2 - 30t + 25, t^3 - t^2 - 30t - 53\n"
    "13 x 13 | t^3 - t^2 - 56t + 181, t^3 - t^2 - 56t + 25\n"
    "13 x 16 | t^3 - t^2 - 69t - 131\n"
    "13 x 19 | t^3 - t^2 - 82t + 155, t^3 - t^2 - 82t - 235\n"
    "13 x 25 | t^3 - t^2 - 108t + 337\n"
    "13 x 28 | t^3 - t^2 - 121t + 545, t^3 - t^2 - 121t - 79\n"
    "13 x 31 | t^3 - t^2 - 134t - 131, t^3 - t^2 - 134t - 521\n"
    "13 x 37 | t^3 - t^2 - 160t + 467, t^3 - t^2 - 160t - 625\n"
    "13 x 43 | t^3 - t^2 - 186t + 961, t^3 - t^2 - 186t + 415\n";

const std::string kZetaTable =
    "N|1|4|7|13|16|19|25|28|31|37|43|49|52|61|64|67|73|76|79|91|97\n"
    "d_N|1|1|2|2|1|2|1|2|2|2|2|3|2|2|1|2|2|2|2|4|2\n";

constexpr std::uint64_t kTableMaxNorm = 43;
constexpr std::uint64_t kZetaMax = 97;

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (const char ch : s) n += ch == '\n';
  return n;
}

std::size_t count_polys(const std::string& table) {
  std::size_t n = 0;
  for (std::size_t pos = table.find("t^3"); pos != std::string::npos; pos = table.find("t^3", pos + 1)) ++n;
  return n;
}

long double eval(const TraceOnePoly& f, long double x) {
  return ((x - 1) * x + static_cast<long double>(f.a)) * x + static_cast<long double>(f.b);
}

// f(lo) and f(hi) have opposite signs.
long double bisect(const TraceOnePoly& f, long double lo, long double hi) {
  const bool rising = eval(f, lo) < 0;
  for (int iter = 0; iter < 400; ++iter) {
    const long double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    const long double v = eval(f, mid);
    if (v == 0) return mid;
    if ((v < 0) == rising)
      lo = mid;
    else
      hi = mid;
  }
  const long double x = (lo + hi) / 2;
  if (hi - lo > 1e-12L * std::max(1.0L, std::fabs(x)))
    throw std::runtime_error("root isolation did not converge for " + f.to_string());
  return x;
}

void add_divergence_note(Check& check, const Divergence& d) {
  check.note = "divergence: formula " + str(d.formula) + ", enumerated " + str(d.enumerated) + ", ideal_count " +
               str(d.ideal);
}

}  // namespace

bool VerificationReport::overall() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(std::string name, std::string expected, std::string actual, bool pass,
                             std::string note) {
  checks.push_back({std::move(name), std::move(expected), std::move(actual), pass, std::move(note)});
}

void VerificationReport::expect_eq(std::string name, const std::string& expected, const std::string& actual) {
  add(std::move(name), expected, actual, expected == actual);
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const Check& c : checks) failed += !c.pass;
  out << subject << ": " << (overall() ? "PASS" : "FAIL") << " (" << checks.size() - failed << "/" << checks.size()
      << " checks)\n";
  for (const Check& c : checks) {
    const bool multiline = c.expected.find('\n') != std::string::npos;
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (multiline) {
      out << (c.pass ? "" : "\n--- expected\n" + c.expected + "--- actual\n" + c.actual);
    } else {
      out << ": expected " << c.expected << ", actual " << c.actual;
    }
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["subject"] = subject;
  j["overall"] = overall();
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["expected"] = c.expected;
    entry["actual"] = c.actual;
    entry["pass"] = c.pass;
    if (!c.note.empty()) entry["note"] = c.note;
    j["checks"].push_back(std::move(entry));
  }
  return j;
}

VerificationReport verify_theorem(const FieldClass& field, std::uint64_t max_norm, unsigned threads) {
  VerificationReport report;
  report.subject = "theorem identity for conductor " + str(field.conductor) + ", N <= " + str(max_norm);
  for (const EnumerationRow& row : enumerate_field(field, max_norm, threads)) {
    const std::uint64_t expected = series_coeff(row.norm);
    report.add("N=" + str(row.norm), str(expected), str(row.count), expected == row.count);
  }
  return report;
}

VerificationReport verify_corollary(const FieldClass& field, Int a_min) {
  if (a_min > 0) throw std::invalid_argument("a_min must be <= 0");
  VerificationReport report;
  report.subject = "per-a counts for conductor " + str(field.conductor) + ", " + to_string(a_min) + " <= a <= 0";
  const Int c = static_cast<Int>(field.conductor);
  for (Int a = 0; a >= a_min; --a) {
    const Int h2 = checked_sub(1, checked_mul(3, a));
    const std::uint64_t count = field_members_for_a(field, a).size();
    if (h2 % c != 0) {
      report.add("a=" + to_string(a), "0", str(count), count == 0, "c does not divide 1 - 3a");
    } else {
      const std::uint64_t n = to_u64(h2 / c);
      const std::uint64_t expected = ideal_count(n);
      report.add("a=" + to_string(a), str(expected), str(count), count == expected, "N=" + str(n));
    }
  }
  return report;
}

std::vector<Divergence> formula3_divergences(const FieldClass& field, std::uint64_t max_norm, unsigned threads) {
  std::vector<Divergence> out;
  for (const EnumerationRow& row : enumerate_field(field, max_norm, threads)) {
    if (!row.a) continue;
    const std::uint64_t formula = formula3_count(row.norm);
    if (formula != row.count) out.push_back({row.norm, formula, row.count, ideal_count(row.norm)});
  }
  return out;
}

VerificationReport verify_formula3(const FieldClass& field, std::uint64_t max_norm, unsigned threads) {
  VerificationReport report;
  report.subject = "sigma_0(P_1(N)) audit for conductor " + str(field.conductor) + ", N <= " + str(max_norm);
  for (const EnumerationRow& row : enumerate_field(field, max_norm, threads)) {
    if (!row.a) continue;
    const std::uint64_t formula = formula3_count(row.norm);
    Check check{"N=" + str(row.norm), str(formula), str(row.count), formula == row.count, {}};
    if (!check.pass) {
      const Divergence d{row.norm, formula, row.count, ideal_count(row.norm)};
      add_divergence_note(check, d);
      // Expected only where the 2-mod-3 part of N is not a square, and then
      // the ideal count must still match.
      check.pass = !inert_part_is_square(row.norm) && row.count == d.ideal;
      if (!check.pass) check.note += "; unexplained";
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::string render_height_table(const FieldClass& field, const std::vector<EnumerationRow>& rows) {
  std::ostringstream out;
  out << "H(f)^2 | f: K_f = K_" << to_string(field.discriminant) << "\n";
  for (const EnumerationRow& row : rows) {
    if (row.count == 0) continue;
    out << field.conductor << " x " << row.norm << " | ";
    for (auto it = row.polys.rbegin(); it != row.polys.rend(); ++it) {
      if (it != row.polys.rbegin()) out << ", ";
      out << it->to_string();
    }
    out << "\n";
  }
  return out.str();
}

std::string render_zeta_table(std::uint64_t max_n) {
  std::string norms = "N";
  std::string counts = "d_N";
  for (std::uint64_t n = 1; n <= max_n; n += 3) {
    const std::uint64_t d = ideal_count(n);
    if (d == 0) continue;
    norms += "|" + str(n);
    counts += "|" + str(d);
  }
  return norms + "\n" + counts + "\n";
}

const std::string& reference_table_k49() { return kTableK49; }
const std::string& reference_table_k169() { return kTableK169; }
const std::string& reference_zeta_table() { return kZetaTable; }

VerificationReport reproduce_tables() {
  VerificationReport report;
  report.subject = "reference tables";
  struct Target {
    const char* label;
    const char* generator;
    const std::string& expected;
  };
  for (const Target& target : {Target{"K_49", "t^3 - t^2 - 2t + 1", kTableK49},
                               Target{"K_169", "t^3 - t^2 - 4t - 1", kTableK169}}) {
    const FieldClass field = field_invariants(parse_poly(target.generator));
    const std::string actual = render_height_table(field, enumerate_field(field, kTableMaxNorm));
    report.expect_eq(std::string(target.label) + " table", target.expected, actual);
    report.expect_eq(std::string(target.label) + " rows", str(count_lines(target.expected) - 1),
                     str(count_lines(actual) - 1));
    report.expect_eq(std::string(target.label) + " polynomials", str(count_polys(target.expected)),
                     str(count_polys(actual)));
  }
  const std::string zeta = render_zeta_table(kZetaMax);
  report.expect_eq("d_N table", kZetaTable, zeta);
  auto values = [](const std::string& table) {
    std::size_t bars = 0;
    for (const char ch : table.substr(table.find('\n') + 1)) bars += ch == '|';
    return bars;
  };
  report.expect_eq("d_N values", str(values(kZetaTable)), str(values(zeta)));
  return report;
}

std::array<long double, 3> real_roots(const TraceOnePoly& f) {
  if (discriminant(f) <= 0) throw std::invalid_argument(f.to_string() + " does not have three distinct real roots");
  // Critical points of t^3 - t^2 + at + b are (1 -+ H)/3 with H^2 = 1 - 3a.
  const long double h = std::sqrt(static_cast<long double>(height_sq(f)));
  const long double t1 = (1 - h) / 3;
  const long double t2 = (1 + h) / 3;
  const long double bound =
      1 + std::max({1.0L, std::fabs(static_cast<long double>(f.a)), std::fabs(static_cast<long double>(f.b))});
  if (!(eval(f, -bound) < 0 && eval(f, t1) > 0 && eval(f, t2) < 0 && eval(f, bound) > 0))
    throw std::runtime_error("root isolation failed for " + f.to_string());
  return {bisect(f, -bound, t1), bisect(f, t1, t2), bisect(f, t2, bound)};
}

VerificationReport norm_proportionality_check(const TraceOnePoly& f, double tolerance) {
  VerificationReport report;
  report.subject = "quotient norm of " + f.to_string();
  const auto roots = real_roots(f);
  long double sum = 0;
  long double sum_sq = 0;
  for (const long double x : roots) {
    sum += x;
    sum_sq += x * x;
  }
  const long double quotient_norm_sq = sum_sq - sum * sum / 3;
  const long double expected = 2.0L / 3.0L * static_cast<long double>(height_sq(f));
  const long double err = std::fabs(quotient_norm_sq - expected);
  std::ostringstream e, a, note;
  e.precision(15);
  a.precision(15);
  note.precision(3);
  e << static_cast<double>(expected);
  a << static_cast<double>(quotient_norm_sq);
  note << "error " << static_cast<double>(err) << ", tolerance " << tolerance;
  report.add("quotient_norm_sq = (2/3) H^2", e.str(), a.str(), err < tolerance, note.str());
  return report;
}

}  // namespace cubictrace
