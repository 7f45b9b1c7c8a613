#include <fstream>
#include <sstream>

#include "doctest.h"

#include "mazur/algebra/errors.hpp"
#include "mazur/report/family_report.hpp"
#include "mazur/report/grammar.hpp"

using namespace mazur;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("run_family_report examples") {
  const FamilyReport two = run_family_report(2);
  REQUIRE(two.rows.size() == 2);
  CHECK(two.rows[1].n == 2);
  CHECK(two.rows[1].delta_second_derivative == 12);
  CHECK(two.rows[1].lambda == 6);

  const FamilyReport one = run_family_report(1);
  CHECK(one.rows[0].homology == "Z,0,0");
  CHECK(one.rows[0].euler == 1);
  CHECK(one.rows[0].f == "1 - t + t^2");
  CHECK(one.rows[0].delta == "t^-2 - 2t^-1 + 3 - 2t + t^2");
  CHECK(one.rows[0].pi1 == "trivial");
  CHECK(one.passed());

  CHECK_THROWS_AS(run_family_report(0), UsageError);
}

TEST_CASE("a corrupted fixture fails the report and names the rows") {
  FamilyReportOptions options;
  options.fixture = parse_family_fixture(slurp(MAZUR_TEST_DATA "/corrupt_fixture.palf"));
  const FamilyReport r = run_family_report(3, options);
  CHECK_FALSE(r.passed());
  CHECK(r.failing_rows() == std::vector<int>{1, 2, 3});
  CHECK(r.conclusion.empty());
  CHECK(r.rows[0].homology == "Z,Z/2,0");
  CHECK(format_text(r).find("status: FAIL (failing n: 1 2 3)") != std::string::npos);
  CHECK(to_json(r)["passed"] == false);
}

TEST_CASE("JSON round-trips field-exactly") {
  const FamilyReport r = run_family_report(10);
  const nlohmann::json j = to_json(r);
  CHECK(family_report_from_json(j) == r);
  CHECK(family_report_from_json(nlohmann::json::parse(j.dump())) == r);
  // Values beyond 64 bits travel as strings.
  FamilyReport big = r;
  big.rows[0].lambda = BigInt("123456789012345678901234567890");
  CHECK(family_report_from_json(to_json(big)) == big);
  CHECK(to_json(big)["rows"][0]["casson"].is_string());
}

TEST_CASE("golden report is byte-identical") {
  const std::string json = to_json(run_family_report(10)).dump(2) + "\n";
  CHECK(json == slurp(MAZUR_GOLDEN "/family_n10.json"));
  CHECK(format_text(run_family_report(3)) == slurp(MAZUR_GOLDEN "/family_n3.txt"));
}

TEST_CASE("conventions are recorded") {
  const FamilyReport r = run_family_report(1);
  CHECK(r.conventions.at("alpha") == "std{1}");
  CHECK(r.conventions.at("beta") == "std{1,2}");
  CHECK(r.conventions.at("gamma") == "std{2,3}");
  CHECK(r.conventions.count("composition") == 1);
  CHECK(r.conventions.count("positive_twist") == 1);
}
