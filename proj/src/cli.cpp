#include "cubictrace/cli.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cubictrace/eisenstein.hpp"
#include "cubictrace/verify.hpp"

namespace cubictrace::cli {

namespace {

using json = nlohmann::ordered_json;

std::string join_residues(const std::vector<std::uint64_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "}";
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::uint64_t parse_u64(const std::string& s) { return to_u64(parse_int(s)); }

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Options {
  std::string format = "text";
  std::string poly;
  std::vector<std::string> polys;
  std::string field;
  std::int64_t a = 0;
  std::uint64_t max_norm = 0;
  std::uint64_t max = 0;
  bool nonzero_only = false;
  bool oracle = false;
  unsigned threads = 1;
};

FieldClass parse_field(const std::string& text) {
  const TraceOnePoly f = parse_poly(text);
  require_cyclic(f);
  return field_invariants(f);
}

int cmd_identify(const Options& opt, std::ostream& out) {
  const TraceOnePoly f = parse_poly(opt.poly);
  const bool irreducible = is_irreducible(f);
  const bool cyclic = irreducible && is_cyclic(f);
  if (!cyclic) {
    if (opt.format == "json") {
      out << json{{"schema_version", kSchemaVersion},
                  {"polynomial", f.to_string()},
                  {"irreducible", irreducible},
                  {"cyclic", false}}
                 .dump(2)
          << "\n";
    } else {
      out << "polynomial: " << f.to_string() << "\n"
          << "irreducible: " << (irreducible ? "yes" : "no") << "\n"
          << "cyclic: no\n";
    }
    require_cyclic(f);  // throws with the failed predicate
  }
  const FieldClass field = field_invariants(f);
  const Int disc = discriminant(f);
  const Int index_sq = disc / field.discriminant;
  const Int index = isqrt(index_sq);
  const bool tame = field.conductor % 3 != 0;
  const std::vector<LocalData> local = local_data(f);

  if (opt.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["polynomial"] = f.to_string();
    j["irreducible"] = true;
    j["cyclic"] = true;
    j["discriminant"] = to_i64(disc);
    j["index_sq"] = to_i64(index_sq);
    j["index"] = to_i64(index);
    j["tame"] = tame;
    j["field"] = field_to_json(field);
    j["local"] = json::array();
    for (const LocalData& d : local)
      j["local"].push_back({{"prime", d.prime},
                            {"disc_valuation", d.disc_valuation},
                            {"type", std::string(to_string(d.type))},
                            {"index_divisor", d.index_divisor}});
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "polynomial: " << f.to_string() << "\n"
      << "irreducible: yes\n"
      << "cyclic: yes\n"
      << "discriminant: " << to_string(disc) << "\n"
      << "conductor: " << field.conductor << "\n"
      << "field discriminant: " << to_string(field.discriminant) << "\n"
      << "index^2: " << to_string(index_sq) << "\n"
      << "index: " << to_string(index) << "\n"
      << "tame: " << (tame ? "yes" : "no") << "\n"
      << "splitting subgroup: " << join_residues(field.splitting_subgroup) << "\n"
      << "canonical polynomial: " << field.canonical_poly.to_string() << "\n"
      << "local data:\n";
  for (const LocalData& d : local)
    out << "  p = " << d.prime << ": v_p(disc) = " << d.disc_valuation << ", " << to_string(d.type)
        << (d.index_divisor ? ", divides the index" : "") << "\n";
  return kOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const FieldClass field = parse_field(opt.field);
  const auto rows = enumerate_field(field, opt.max_norm, resolve_threads(opt.threads));
  if (opt.format == "csv") {
    out << rows_to_csv(rows, opt.nonzero_only);
  } else if (opt.format == "json") {
    out << rows_to_json(field, rows, opt.nonzero_only).dump(2) << "\n";
  } else if (opt.nonzero_only) {
    out << render_height_table(field, rows);
  } else {
    out << "H(f)^2 | f: K_f = K_" << to_string(field.discriminant) << "\n";
    for (const EnumerationRow& row : rows) {
      out << field.conductor << " x " << row.norm << " | ";
      if (row.polys.empty()) out << "(none)";
      for (auto it = row.polys.rbegin(); it != row.polys.rend(); ++it)
        out << (it == row.polys.rbegin() ? "" : ", ") << it->to_string();
      out << "\n";
    }
  }
  return kOk;
}

int cmd_count(const Options& opt, std::ostream& out) {
  const FieldClass field = parse_field(opt.field);
  const Int a = opt.a;
  const std::vector<TraceOnePoly> members = field_members_for_a(field, a);
  const Int h2 = checked_sub(1, checked_mul(3, a));
  const bool divisible = h2 % static_cast<Int>(field.conductor) == 0;
  std::optional<std::uint64_t> norm;
  if (divisible) norm = to_u64(h2 / static_cast<Int>(field.conductor));
  const std::uint64_t predicted = norm ? ideal_count(*norm) : 0;
  const std::string reason = divisible ? "" : "c does not divide 1 - 3a";

  if (opt.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = field_to_json(field);
    j["a"] = opt.a;
    j["count"] = members.size();
    j["N"] = norm ? json(*norm) : json(nullptr);
    j["predicted"] = predicted;
    j["reason"] = divisible ? json(nullptr) : json(reason);
    j["polys"] = json::array();
    for (const TraceOnePoly& f : members) j["polys"].push_back(f.to_string());
    out << j.dump(2) << "\n";
  } else {
    out << "count: " << members.size() << "\n";
    if (norm) {
      out << "N: " << *norm << "\n" << "predicted: " << predicted << "\n";
    } else {
      out << "predicted: 0 (" << reason << ": " << field.conductor << " does not divide " << to_string(h2)
          << ")\n";
    }
    for (const TraceOnePoly& f : members) out << "  " << f.to_string() << "\n";
  }
  return members.size() == predicted ? kOk : kFailure;
}

int cmd_zeta(const Options& opt, std::ostream& out) {
  const IdealCountTable table = ideal_count_table(opt.max, opt.oracle);
  auto series = [&](std::uint64_t n) { return n % 3 == 0 ? table.at(n) - table.at(n / 3) : table.at(n); };
  if (opt.format == "csv") {
    out << "N,d_N,series_coeff\n";
    for (std::uint64_t n = 1; n <= opt.max; ++n) out << n << "," << table.at(n) << "," << series(n) << "\n";
  } else if (opt.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["method"] = opt.oracle ? "divisor_sum" : "multiplicative";
    j["coefficients"] = json::array();
    for (std::uint64_t n = 1; n <= opt.max; ++n)
      j["coefficients"].push_back({{"N", n}, {"d_N", table.at(n)}, {"series_coeff", series(n)}});
    out << j.dump(2) << "\n";
  } else {
    std::string norms = "N";
    std::string counts = "d_N";
    for (std::uint64_t n = 1; n <= opt.max; n += 3) {
      if (table.at(n) == 0) continue;
      norms += "|" + std::to_string(n);
      counts += "|" + std::to_string(table.at(n));
    }
    out << norms << "\n" << counts << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const FieldClass field = parse_field(opt.field);
  const unsigned threads = resolve_threads(opt.threads);
  const Int num = checked_sub(1, checked_mul(static_cast<Int>(field.conductor), static_cast<Int>(opt.max_norm)));
  const Int a_min = -floor_div(-num, 3);
  const std::vector<VerificationReport> reports = {verify_theorem(field, opt.max_norm, threads),
                                                   verify_corollary(field, a_min),
                                                   verify_formula3(field, opt.max_norm, threads)};
  const bool overall = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.overall(); });
  if (opt.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = field_to_json(field);
    j["max_norm"] = opt.max_norm;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(r.to_json());
    j["overall"] = overall;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << r.to_text() << "\n";
    out << "overall: " << (overall ? "PASS" : "FAIL") << "\n";
  }
  return overall ? kOk : kFailure;
}

int cmd_paper_tables(const Options& opt, std::ostream& out) {
  const VerificationReport report = reproduce_tables();
  const FieldClass k49 = field_invariants(parse_poly("t^3 - t^2 - 2t + 1"));
  const FieldClass k169 = field_invariants(parse_poly("t^3 - t^2 - 4t - 1"));
  const std::string t49 = render_height_table(k49, enumerate_field(k49, 43));
  const std::string t169 = render_height_table(k169, enumerate_field(k169, 43));
  const std::string zeta = render_zeta_table(97);
  if (opt.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tables"] = {{"K_49", t49}, {"K_169", t169}, {"d_N", zeta}};
    j["report"] = report.to_json();
    out << j.dump(2) << "\n";
  } else {
    out << t49 << "\n" << t169 << "\n" << zeta << "\n" << report.to_text();
  }
  return report.overall() ? kOk : kFailure;
}

int cmd_isomorphic(const Options& opt, std::ostream& out) {
  const TraceOnePoly f = parse_poly(opt.polys.at(0));
  const TraceOnePoly g = parse_poly(opt.polys.at(1));
  require_cyclic(f);
  require_cyclic(g);
  const bool same = is_isomorphic(f, g);
  if (opt.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["isomorphic"] = same;
    j["fields"] = {field_to_json(field_invariants(f)), field_to_json(field_invariants(g))};
    out << j.dump(2) << "\n";
  } else {
    out << (same ? "true" : "false") << "\n";
  }
  return same ? kOk : kFailure;
}

}  // namespace

json field_to_json(const FieldClass& field) {
  return {{"conductor", field.conductor},
          {"discriminant", to_i64(field.discriminant)},
          {"subgroup", field.splitting_subgroup},
          {"canonical_poly", field.canonical_poly.to_string()}};
}

json rows_to_json(const FieldClass& field, const std::vector<EnumerationRow>& rows, bool nonzero_only) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["field"] = field_to_json(field);
  j["rows"] = json::array();
  for (const EnumerationRow& row : rows) {
    if (nonzero_only && row.count == 0) continue;
    json polys = json::array();
    for (const TraceOnePoly& f : row.polys)
      polys.push_back({{"a", to_i64(f.a)}, {"b", to_i64(f.b)}, {"polynomial", f.to_string()}});
    j["rows"].push_back({{"N", row.norm},
                         {"height_sq", to_i64(row.height_sq)},
                         {"a", row.a ? json(to_i64(*row.a)) : json(nullptr)},
                         {"count", row.count},
                         {"predicted", row.predicted},
                         {"polys", std::move(polys)}});
  }
  return j;
}

std::string rows_to_csv(const std::vector<EnumerationRow>& rows, bool nonzero_only) {
  std::ostringstream out;
  out << "N,height_sq,a,b,polynomial\n";
  for (const EnumerationRow& row : rows) {
    if (nonzero_only && row.count == 0) continue;
    const std::string prefix = std::to_string(row.norm) + "," + to_string(row.height_sq) + ",";
    if (row.polys.empty()) {
      out << prefix << (row.a ? to_string(*row.a) : "") << ",,\n";
      continue;
    }
    for (const TraceOnePoly& f : row.polys)
      out << prefix << to_string(f.a) << "," << to_string(f.b) << "," << f.to_string() << "\n";
  }
  return out.str();
}

std::vector<EnumerationRow> rows_from_csv(std::string_view csv) {
  std::vector<EnumerationRow> rows;
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != "N,height_sq,a,b,polynomial")
    throw std::invalid_argument("missing CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line, ',');
    if (cells.size() != 5) throw std::invalid_argument("expected 5 fields: " + line);
    const std::uint64_t norm = parse_u64(cells[0]);
    if (rows.empty() || rows.back().norm != norm) {
      EnumerationRow row;
      row.norm = norm;
      row.height_sq = parse_int(cells[1]);
      if (!cells[2].empty()) row.a = parse_int(cells[2]);
      row.predicted = ideal_count(norm);
      rows.push_back(std::move(row));
    }
    EnumerationRow& row = rows.back();
    if (cells[3].empty()) {
      if (!cells[4].empty()) throw std::invalid_argument("polynomial without b: " + line);
      continue;
    }
    const TraceOnePoly f{parse_int(cells[2]), parse_int(cells[3])};
    if (f.to_string() != cells[4]) throw std::invalid_argument("polynomial does not match a, b: " + line);
    row.polys.push_back(f);
    row.count = row.polys.size();
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic cubic fields through their trace-one defining polynomials", "cubictrace"};
  app.require_subcommand(1);
  Options opt;
  const auto formats = [](std::initializer_list<std::string> xs) { return CLI::IsMember(std::vector<std::string>(xs)); };
  const auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores)")->capture_default_str();
  };

  auto* identify = app.add_subcommand("identify", "Field invariants and local data of a polynomial");
  auto* poly_opt = identify->add_option("--poly", opt.poly, "Polynomial t^3 - t^2 + at + b");
  identify->add_option("polynomial", opt.poly, "Polynomial (positional form)")->excludes(poly_opt);
  identify->add_option("--format", opt.format)->check(formats({"text", "json"}))->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Trace-one generators of a field by height");
  enumerate->add_option("--field", opt.field, "Any defining polynomial of the field")->required();
  enumerate->add_option("--max-norm", opt.max_norm, "Largest N = H^2 / c")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--format", opt.format)->check(formats({"text", "csv", "json"}))->capture_default_str();
  enumerate->add_flag("--nonzero-only", opt.nonzero_only, "Omit heights with no generator");
  add_threads(enumerate);

  auto* count = app.add_subcommand("count", "Number of field generators with a given t coefficient");
  count->add_option("--field", opt.field)->required();
  count->add_option("-a", opt.a, "t coefficient, <= 0")
      ->required()
      ->check(CLI::Range(std::numeric_limits<std::int64_t>::min(), std::int64_t{0}));
  count->add_option("--format", opt.format)->check(formats({"text", "json"}))->capture_default_str();

  auto* zeta = app.add_subcommand("zeta-coeffs", "Ideal counts d_N of Q(sqrt(-3))");
  zeta->add_option("--max", opt.max, "Largest N")->required()->check(CLI::PositiveNumber);
  zeta->add_option("--format", opt.format)->check(formats({"text", "csv", "json"}))->capture_default_str();
  zeta->add_flag("--oracle", opt.oracle, "Use the divisor-sum definition");

  auto* verify = app.add_subcommand("verify", "Check generator counts against ideal counts");
  verify->add_option("--field", opt.field)->required();
  verify->add_option("--max-norm", opt.max_norm)->required()->check(CLI::PositiveNumber);
  verify->add_option("--format", opt.format)->check(formats({"text", "json"}))->capture_default_str();
  add_threads(verify);

  auto* tables = app.add_subcommand("paper-tables", "Regenerate and compare the reference tables");
  tables->add_option("--format", opt.format)->check(formats({"text", "json"}))->capture_default_str();

  auto* isomorphic = app.add_subcommand("isomorphic", "Whether two polynomials define the same field");
  isomorphic->add_option("polys", opt.polys, "Two polynomials")->required()->expected(2);
  isomorphic->add_option("--format", opt.format)->check(formats({"text", "json"}))->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  if (identify->parsed() && opt.poly.empty()) {
    err << "usage error: identify needs a polynomial\n";
    return kUsage;
  }

  try {
    if (identify->parsed()) return cmd_identify(opt, out);
    if (enumerate->parsed()) return cmd_enumerate(opt, out);
    if (count->parsed()) return cmd_count(opt, out);
    if (zeta->parsed()) return cmd_zeta(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (tables->parsed()) return cmd_paper_tables(opt, out);
    if (isomorphic->parsed()) return cmd_isomorphic(opt, out);
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::overflow_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace cubictrace::cli
