#include <sstream>

#include "cubictrace/cli.hpp"
#include "cubictrace/verify.hpp"
#include "doctest.h"

using namespace cubictrace;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("identify") {
  const Result k49 = run({"identify", "t^3 - t^2 - 2t + 1"});
  CHECK(k49.code == 0);
  CHECK(k49.out.find("conductor: 7\n") != std::string::npos);
  CHECK(k49.out.find("field discriminant: 49\n") != std::string::npos);
  CHECK(k49.out.find("tame: yes\n") != std::string::npos);

  const Result idx = run({"identify", "--poly", "t^3 - t^2 - 37t + 29"});
  CHECK(idx.code == 0);
  CHECK(idx.out.find("conductor: 7\n") != std::string::npos);
  CHECK(idx.out.find("index: 64\n") != std::string::npos);
  CHECK(idx.out.find("discriminant: 200704\n") != std::string::npos);

  const Result red = run({"identify", "t^3 - t^2"});
  CHECK(red.code == 3);
  CHECK(red.err.find("reducible") != std::string::npos);

  const Result json = run({"identify", "t^3-t^2-4t-1", "--format", "json"});
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["field"]["conductor"] == 13);
  CHECK(j["field"]["discriminant"] == 169);
  CHECK(j["field"]["subgroup"] == std::vector<int>{1, 5, 8, 12});
  CHECK(j["field"]["canonical_poly"] == "t^3 - t^2 - 4t - 1");
}

TEST_CASE("enumerate") {
  const Result table = run({"enumerate", "--field", "t^3-t^2-2t+1", "--max-norm", "43", "--nonzero-only"});
  CHECK(table.code == 0);
  CHECK(table.out == reference_table_k49());

  const Result one = run({"enumerate", "--field", "t^3-t^2-4t-1", "--max-norm", "1"});
  CHECK(one.out == "H(f)^2 | f: K_f = K_169\n13 x 1 | t^3 - t^2 - 4t - 1\n");

  const Result two = run({"enumerate", "--field", "t^3-t^2-2t+1", "--max-norm", "2"});
  CHECK(two.out.find("7 x 2 | (none)\n") != std::string::npos);

  const Result csv = run({"enumerate", "--field", "t^3-t^2-2t+1", "--max-norm", "4", "--format", "csv"});
  CHECK(csv.out ==
        "N,height_sq,a,b,polynomial\n"
        "1,7,-2,1,t^3 - t^2 - 2t + 1\n"
        "2,14,,,\n"
        "3,21,,,\n"
        "4,28,-9,1,t^3 - t^2 - 9t + 1\n");

  const Result json = run({"enumerate", "--field", "t^3-t^2-2t+1", "--max-norm", "7", "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["rows"].size() == 7);
  CHECK(j["rows"][1]["a"].is_null());
  CHECK(j["rows"][6]["count"] == 2);
  CHECK(j["rows"][6]["polys"][0]["b"] == -13);
}

TEST_CASE("CSV round trip") {
  for (const char* gen : {"t^3 - t^2 - 2t + 1", "t^3 - t^2 - 4t - 1"}) {
    const FieldClass field = field_invariants(parse_poly(gen));
    const auto rows = enumerate_field(field, 60);
    for (const bool nonzero : {false, true}) {
      const auto back = cli::rows_from_csv(cli::rows_to_csv(rows, nonzero));
      std::vector<EnumerationRow> expected;
      for (const auto& row : rows)
        if (!nonzero || row.count) expected.push_back(row);
      REQUIRE(back.size() == expected.size());
      for (std::size_t i = 0; i < back.size(); ++i) {
        REQUIRE(back[i].norm == expected[i].norm);
        REQUIRE(back[i].height_sq == expected[i].height_sq);
        REQUIRE(back[i].a == expected[i].a);
        REQUIRE(back[i].polys == expected[i].polys);
        REQUIRE(back[i].count == expected[i].count);
        REQUIRE(back[i].predicted == expected[i].predicted);
      }
    }
  }
  CHECK_THROWS_AS(cli::rows_from_csv("N,b\n"), std::invalid_argument);
  CHECK_THROWS_AS(cli::rows_from_csv("N,height_sq,a,b,polynomial\n1,7,-2,1,t^3 - t^2\n"), std::invalid_argument);
}

TEST_CASE("count") {
  const Result thirty = run({"count", "--field", "t^3-t^2-2t+1", "-a", "-30"});
  CHECK(thirty.code == 0);
  CHECK(thirty.out.rfind("count: 2\n", 0) == 0);
  CHECK(thirty.out.find("predicted: 2\n") != std::string::npos);

  const Result ten = run({"count", "--field", "t^3-t^2-2t+1", "-a", "-23"});
  CHECK(ten.out.rfind("count: 0\n", 0) == 0);
  CHECK(ten.out.find("N: 10\n") != std::string::npos);

  const Result div = run({"count", "--field", "t^3-t^2-2t+1", "-a", "-1"});
  CHECK(div.code == 0);
  CHECK(div.out.find("c does not divide 1 - 3a") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"count", "--field", "t^3-t^2-2t+1", "-a", "-1", "--format", "json"}).out);
  CHECK(j["count"] == 0);
  CHECK(j["N"].is_null());
  CHECK(j["reason"] == "c does not divide 1 - 3a");
}

TEST_CASE("zeta coefficients") {
  const Result text = run({"zeta-coeffs", "--max", "97"});
  CHECK(text.out == reference_zeta_table());
  const Result oracle = run({"zeta-coeffs", "--max", "97", "--oracle"});
  CHECK(oracle.out == text.out);
  const Result csv = run({"zeta-coeffs", "--max", "4", "--format", "csv"});
  CHECK(csv.out == "N,d_N,series_coeff\n1,1,1\n2,0,0\n3,1,0\n4,1,1\n");
}

TEST_CASE("verify, tables and isomorphism") {
  CHECK(run({"verify", "--field", "t^3-t^2-2t+1", "--max-norm", "43"}).code == 0);
  const auto j = nlohmann::json::parse(
      run({"verify", "--field", "t^3-t^2-4t-1", "--max-norm", "20", "--format", "json", "--threads", "3"}).out);
  CHECK(j["overall"] == true);
  CHECK(j["reports"].size() == 3);
  CHECK(run({"paper-tables"}).code == 0);
  const Result iso = run({"isomorphic", "t^3-t^2-2t+1", "t^3-t^2-9t+1"});
  CHECK(iso.code == 0);
  CHECK(iso.out == "true\n");
  const Result non = run({"isomorphic", "t^3-t^2-2t+1", "t^3-t^2-4t-1"});
  CHECK(non.code == 1);
  CHECK(non.out == "false\n");
}

TEST_CASE("exit codes on bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"enumerate", "--field", "t^3-t^2-2t+1"}).code == 2);
  CHECK(run({"enumerate", "--field", "t^3-t^2-2t+1", "--max-norm", "0"}).code == 2);
  CHECK(run({"enumerate", "--field", "t^3-t^2-2t+1", "--max-norm", "5", "--format", "xml"}).code == 2);
  CHECK(run({"count", "--field", "t^3-t^2-2t+1", "-a", "3"}).code == 2);
  CHECK(run({"identify"}).code == 2);
  CHECK(run({"isomorphic", "t^3-t^2-2t+1"}).code == 2);
  CHECK(run({"enumerate", "--field", "t^3 + t^2", "--max-norm", "5"}).code == 3);
  CHECK(run({"enumerate", "--field", "t^3 - t^2 - 3t + 1", "--max-norm", "5"}).code == 3);
  CHECK(run({"isomorphic", "t^3-t^2", "t^3-t^2-2t+1"}).code == 3);
  CHECK(run({"identify", "t^3 - t^2 - 2t + 1 + +"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}
