#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "mazur/algebra/bigint.hpp"
#include "mazur/lefschetz/palf.hpp"

namespace mazur {

struct FamilyReportRow {
  int n = 0;
  bool allowable = false;
  std::string homology;  // "Z,0,0"
  long long euler = 0;
  bool homology_sphere = false;
  std::string pi1;  // "trivial" | "unknown"
  std::string f;
  std::string delta;
  BigInt delta_second_derivative;
  BigInt lambda;
  bool closed_form_match = false;
  std::string mismatch;  // empty when closed_form_match

  bool passed() const;
  friend bool operator==(const FamilyReportRow&, const FamilyReportRow&) = default;
};

struct FamilyReport {
  std::map<std::string, std::string> conventions;
  std::vector<FamilyReportRow> rows;
  bool lambda_pairwise_distinct = false;
  bool lambda_all_nonzero = false;
  // Present only when every row passes and both flags above hold.
  std::string conclusion;

  bool passed() const;
  std::vector<int> failing_rows() const;
  friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

struct FamilyReportOptions {
  FamilyFixture fixture = calibrated_family_fixture();
  std::size_t tietze_budget = 200;
};

FamilyReport run_family_report(int n_max, const FamilyReportOptions& options = {});

nlohmann::json to_json(const FamilyReport& report);
FamilyReport family_report_from_json(const nlohmann::json& j);
std::string format_text(const FamilyReport& report);

}  // namespace mazur
