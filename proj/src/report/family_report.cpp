#include "mazur/report/family_report.hpp"

#include <set>
#include <sstream>

#include "mazur/algebra/errors.hpp"
#include "mazur/algebra/presentation.hpp"
#include "mazur/knot/alexander.hpp"
#include "mazur/report/grammar.hpp"

namespace mazur {

namespace {

constexpr const char* kPointHomology = "Z,0,0";

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= BigInt(INT64_MIN) && v <= BigInt(INT64_MAX)) return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

std::map<std::string, std::string> conventions_for(const FamilyFixture& fx) {
  return {
      {"fiber", "S(0,4): sphere with 4 holes, basepoint on hole 4"},
      {"alpha", format_standard_curve(fx.alpha)},
      {"beta", format_standard_curve(fx.beta)},
      {"gamma", format_standard_curve(fx.gamma)},
      {"gamma_n", "apply((T gamma T beta)^n, gamma)"},
      {"monodromy", "(T alpha, T beta, T gamma_n)"},
      {"composition", "(phi psi)(w) = phi(psi(w)); a monodromy (t_1..t_m) composes to t_1 o ... o t_m"},
      {"positive_twist", "enclosed generators x -> c x c^-1, c the curve word in an adapted geometric basis"},
      {"polynomials", "ascending exponent; f normalized to f(0) != 0 and f(1) = 1; Delta symmetric with Delta(1) = 1"},
  };
}

}  // namespace

bool FamilyReportRow::passed() const { return closed_form_match && allowable && homology == kPointHomology; }

bool FamilyReport::passed() const {
  if (rows.empty()) return false;
  for (const auto& r : rows) {
    if (!r.passed()) return false;
  }
  return lambda_pairwise_distinct && lambda_all_nonzero;
}

std::vector<int> FamilyReport::failing_rows() const {
  std::vector<int> out;
  for (const auto& r : rows) {
    if (!r.passed()) out.push_back(r.n);
  }
  return out;
}

FamilyReport run_family_report(int n_max, const FamilyReportOptions& options) {
  if (n_max < 1) throw UsageError("n_max must be at least 1");
  FamilyReport report;
  report.conventions = conventions_for(options.fixture);
  std::set<BigInt> seen;
  bool nonzero = true;
  for (int n = 1; n <= n_max; ++n) {
    const PALFSpec spec = family_palf(n, options.fixture);
    FamilyReportRow row;
    row.n = n;
    row.allowable = allowable(spec).allowable;
    const HomologyResult h = homology(spec);
    row.homology = h.summary();
    row.euler = h.euler;
    row.homology_sphere = boundary_is_homology_sphere(spec);
    row.pi1 = to_string(simplify_presentation(pi1_presentation(spec), options.tietze_budget).verdict);

    const FamilyInvariants inv = compute_family_invariants(n);
    row.f = format_laurent(inv.f);
    row.delta = format_laurent(inv.delta.poly());
    row.delta_second_derivative = inv.delta_second_derivative;
    row.lambda = inv.lambda.lambda;
    row.mismatch = closed_form_mismatch(inv);
    row.closed_form_match = row.mismatch.empty();

    seen.insert(row.lambda);
    nonzero = nonzero && row.lambda != 0;
    report.rows.push_back(std::move(row));
  }
  report.lambda_pairwise_distinct = seen.size() == report.rows.size();
  report.lambda_all_nonzero = nonzero;
  const bool rows_ok = report.failing_rows().empty();
  if (rows_ok && report.lambda_pairwise_distinct && report.lambda_all_nonzero) {
    report.conclusion =
        "Casson invariants of the boundaries are pairwise distinct and nonzero: the boundaries are "
        "mutually non-homeomorphic homology spheres and none is homeomorphic to S^3";
  }
  return report;
}

nlohmann::json to_json(const FamilyReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row = {
        {"n", r.n},
        {"allowable", r.allowable},
        {"homology", r.homology},
        {"euler_characteristic", r.euler},
        {"boundary_homology_sphere", r.homology_sphere},
        {"pi1", r.pi1},
        {"f", r.f},
        {"delta", r.delta},
        {"delta_second_derivative_at_1", big_to_json(r.delta_second_derivative)},
        {"casson", big_to_json(r.lambda)},
        {"closed_form_match", r.closed_form_match},
    };
    if (!r.mismatch.empty()) row["mismatch"] = r.mismatch;
    rows.push_back(std::move(row));
  }
  nlohmann::json conclusions = {
      {"lambda_pairwise_distinct", report.lambda_pairwise_distinct},
      {"lambda_all_nonzero", report.lambda_all_nonzero},
  };
  if (!report.conclusion.empty()) conclusions["statement"] = report.conclusion;
  return {
      {"conventions", report.conventions},
      {"rows", std::move(rows)},
      {"conclusions", std::move(conclusions)},
      {"passed", report.passed()},
  };
}

FamilyReport family_report_from_json(const nlohmann::json& j) {
  FamilyReport report;
  report.conventions = j.at("conventions").get<std::map<std::string, std::string>>();
  for (const auto& r : j.at("rows")) {
    FamilyReportRow row;
    row.n = r.at("n").get<int>();
    row.allowable = r.at("allowable").get<bool>();
    row.homology = r.at("homology").get<std::string>();
    row.euler = r.at("euler_characteristic").get<long long>();
    row.homology_sphere = r.at("boundary_homology_sphere").get<bool>();
    row.pi1 = r.at("pi1").get<std::string>();
    row.f = r.at("f").get<std::string>();
    row.delta = r.at("delta").get<std::string>();
    row.delta_second_derivative = big_from_json(r.at("delta_second_derivative_at_1"));
    row.lambda = big_from_json(r.at("casson"));
    row.closed_form_match = r.at("closed_form_match").get<bool>();
    row.mismatch = r.value("mismatch", std::string());
    report.rows.push_back(std::move(row));
  }
  const auto& c = j.at("conclusions");
  report.lambda_pairwise_distinct = c.at("lambda_pairwise_distinct").get<bool>();
  report.lambda_all_nonzero = c.at("lambda_all_nonzero").get<bool>();
  report.conclusion = c.value("statement", std::string());
  return report;
}

std::string format_text(const FamilyReport& report) {
  std::ostringstream out;
  out << "Family X_n: PALF with fiber S(0,4) and monodromy (T alpha, T beta, T gamma_n)\n";
  for (const auto& [k, v] : report.conventions) out << "  " << k << ": " << v << "\n";
  out << "\n";
  for (const auto& r : report.rows) {
    out << "n=" << r.n << "  allowable=" << (r.allowable ? "yes" : "no") << "  H_*=" << r.homology
        << "  chi=" << r.euler << "  boundary_ZHS3=" << (r.homology_sphere ? "yes" : "no") << "  pi1=" << r.pi1
        << "  Delta''(1)=" << r.delta_second_derivative << "  lambda=" << r.lambda
        << "  closed_form=" << (r.closed_form_match ? "ok" : "MISMATCH") << "\n";
    out << "    f(t)     = " << r.f << "\n";
    out << "    Delta(t) = " << r.delta << "\n";
    if (!r.mismatch.empty()) out << "    " << r.mismatch << "\n";
  }
  out << "\n";
  if (!report.conclusion.empty()) out << "conclusion: " << report.conclusion << "\n";
  out << "status: " << (report.passed() ? "PASS" : "FAIL");
  if (const auto bad = report.failing_rows(); !bad.empty()) {
    out << " (failing n:";
    for (int n : bad) out << " " << n;
    out << ")";
  }
  out << "\n";
  return out.str();
}

}  // namespace mazur
