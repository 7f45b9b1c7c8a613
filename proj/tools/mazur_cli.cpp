// Command-line front end: family reports, PALF analysis, Alexander
// polynomials, Casson surgery and twist evaluation.
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "mazur/algebra/errors.hpp"
#include "mazur/knot/alexander.hpp"
#include "mazur/report/family_report.hpp"
#include "mazur/report/grammar.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mazur::UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw mazur::UsageError("cannot write " + output);
  out << text;
}

std::vector<std::int64_t> parse_weights(const std::string& text, int generators) {
  if (text.empty()) return std::vector<std::int64_t>(static_cast<std::size_t>(generators), 1);
  std::vector<std::int64_t> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      w.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw mazur::UsageError("bad weight '" + item + "'");
    }
  }
  return w;
}

std::string format_images(const mazur::MappingClass& m) {
  std::string out;
  for (int g = 0; g < m.rank(); ++g) {
    out += "x" + std::to_string(g + 1) + " -> " + mazur::format_word(m.images()[static_cast<std::size_t>(g)]) + "\n";
  }
  return out;
}

std::string format_class(const std::vector<std::int64_t>& cls) {
  std::string out = "(";
  for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + std::to_string(cls[i]);
  return out + ")";
}

int run_family(int n_max, bool json, const std::string& fixture_path, std::size_t budget, const std::string& output) {
  mazur::FamilyReportOptions options;
  options.tietze_budget = budget;
  if (!fixture_path.empty()) options.fixture = mazur::parse_family_fixture(read_file(fixture_path));
  const auto report = mazur::run_family_report(n_max, options);
  emit(json ? mazur::to_json(report).dump(2) + "\n" : mazur::format_text(report), output);
  if (!report.passed()) {
    std::cerr << "verification failed for n:";
    for (int n : report.failing_rows()) std::cerr << " " << n;
    if (!report.lambda_pairwise_distinct || !report.lambda_all_nonzero) std::cerr << " (Casson invariants)";
    std::cerr << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

int run_palf(const std::string& path, bool json, std::size_t budget, const std::string& output) {
  const auto spec = mazur::parse_monodromy(read_file(path));
  const auto allow = mazur::allowable(spec);
  const auto h = mazur::homology(spec);
  const auto pi1 = mazur::pi1_presentation(spec);
  const auto simplified = mazur::simplify_presentation(pi1, budget);
  const auto names = mazur::default_generator_names(spec.fiber.rank());
  const mazur::NamedPresentation named{pi1, names};
  const mazur::NamedPresentation named_simplified{
      simplified.presentation, mazur::default_generator_names(simplified.presentation.generators())};
  const auto monodromy = mazur::total_monodromy(spec);

  std::vector<std::string> cycles;
  for (const auto& c : spec.vanishing_cycles) cycles.push_back(mazur::format_word(c.word()));
  std::vector<std::string> images;
  for (const auto& w : monodromy.images()) images.push_back(mazur::format_word(w));

  if (json) {
    nlohmann::json j = {
        {"fiber", "S(0," + std::to_string(spec.fiber.holes()) + ")"},
        {"vanishing_cycles", cycles},
        {"allowable", allow.allowable},
        {"homology", h.summary()},
        {"euler_characteristic", h.euler},
        {"boundary_homology_sphere", mazur::boundary_is_homology_sphere(spec)},
        {"boundary_matrix", mazur::format_matrix(mazur::boundary_matrix(spec))},
        {"pi1_presentation", mazur::format_presentation(named)},
        {"pi1", mazur::to_string(simplified.verdict)},
        {"pi1_simplified", mazur::format_presentation(named_simplified)},
        {"total_monodromy", images},
    };
    if (allow.first_null_homologous) j["first_null_homologous_cycle"] = *allow.first_null_homologous + 1;
    emit(j.dump(2) + "\n", output);
    return kExitOk;
  }
  std::ostringstream out;
  out << "fiber: S(0," << spec.fiber.holes() << ")\n";
  for (std::size_t i = 0; i < cycles.size(); ++i) out << "cycle " << i + 1 << ": " << cycles[i] << "\n";
  out << "allowable: " << (allow.allowable ? "yes" : "no");
  if (allow.first_null_homologous) out << " (cycle " << *allow.first_null_homologous + 1 << " is null-homologous)";
  out << "\nboundary matrix: " << mazur::format_matrix(mazur::boundary_matrix(spec)) << "\n";
  out << "homology H0,H1,H2: " << h.summary() << "\nEuler characteristic: " << h.euler << "\n";
  out << "boundary is a homology sphere: " << (mazur::boundary_is_homology_sphere(spec) ? "yes" : "no") << "\n";
  out << "pi1: < " << mazur::format_presentation(named) << " >\n";
  out << "pi1 after " << simplified.moves << " Tietze moves: < " << mazur::format_presentation(named_simplified)
      << " > (" << mazur::to_string(simplified.verdict) << ")\n";
  out << "total monodromy:\n" << format_images(monodromy);
  emit(out.str(), output);
  return kExitOk;
}

int run_alexander(const std::string& text, const std::string& weights_text) {
  const auto named = mazur::parse_presentation(text);
  const auto weights = parse_weights(weights_text, named.presentation.generators());
  const auto delta = mazur::alexander_from_presentation(named.presentation, weights);
  std::cout << mazur::format_laurent(delta) << "\n";
  try {
    const auto normalized = mazur::NormalizedAlexander::normalize(delta);
    std::cout << "normalized: " << mazur::format_laurent(normalized.poly()) << "\n";
  } catch (const mazur::UsageError&) {
    // Not symmetrizable (e.g. a ribbon-disk group); the raw polynomial is the answer.
  }
  return kExitOk;
}

int run_casson(const std::string& delta_text, long long m, long long lambda0) {
  const auto delta = mazur::NormalizedAlexander::normalize(mazur::parse_laurent(delta_text));
  const auto value = mazur::casson_surgery(lambda0, m, delta);
  std::cout << "Delta(t) = " << mazur::format_laurent(delta.poly()) << "\n";
  std::cout << "Delta''(1) = " << delta.second_derivative_at_one() << "\n";
  std::cout << "lambda = " << value.lambda << "\n";
  return kExitOk;
}

int run_twist(const std::string& surface_text, const std::string& expr) {
  const auto surface = mazur::parse_surface(surface_text);
  const auto result = mazur::parse_twist_expression(surface, expr);
  if (const auto* c = std::get_if<mazur::Curve>(&result)) {
    std::cout << "word: " << mazur::format_word(c->word()) << "\n";
    std::cout << "homology class: " << format_class(c->homology_class()) << "\n";
  } else {
    std::cout << format_images(std::get<mazur::MappingClass>(result));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar Lefschetz fibrations, Alexander polynomials and Casson invariants"};
  app.require_subcommand(1);

  int n_max = 0;
  bool json = false;
  std::string fixture;
  std::string output;
  std::size_t budget = 200;
  auto* family = app.add_subcommand("family", "verify the X_n family for n = 1..N");
  family->add_option("--n-max", n_max, "largest n")->required()->check(CLI::PositiveNumber);
  family->add_flag("--json", json, "emit JSON");
  family->add_option("--fixture", fixture, "monodromy-format file defining alpha, beta, gamma");
  family->add_option("--budget", budget, "Tietze move budget for the pi1 heuristic");
  family->add_option("--output", output, "write the report here instead of stdout");

  std::string input;
  auto* palf = app.add_subcommand("palf", "analyze a monodromy file");
  palf->add_option("--input", input, "monodromy file")->required();
  palf->add_flag("--json", json, "emit JSON");
  palf->add_option("--budget", budget, "Tietze move budget for the pi1 heuristic");
  palf->add_option("--output", output, "write the report here instead of stdout");

  std::string presentation;
  std::string weights;
  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of a deficiency-one presentation");
  alexander->add_option("--presentation", presentation, "e.g. \"x y | x y x y^-1 x^-1 y^-1\"")->required();
  alexander->add_option("--weights", weights, "comma-separated generator weights (default all 1)");

  std::string delta;
  long long m = 0;
  long long lambda0 = 0;
  auto* casson = app.add_subcommand("casson", "Casson invariant of 1/m surgery");
  casson->add_option("--delta", delta, "Alexander polynomial of the knot")->required();
  casson->add_option("--m", m, "surgery parameter (1/m surgery)")->required();
  casson->add_option("--lambda0", lambda0, "Casson invariant of the ambient homology sphere");

  std::string surface;
  std::string expr;
  auto* twist = app.add_subcommand("twist", "evaluate a curve or mapping-class expression");
  twist->add_option("--surface", surface, "e.g. S(0,4)")->required();
  twist->add_option("--expr", expr, "e.g. \"apply((T std{2,3} T std{1,2})^2, std{2,3})\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*family) return run_family(n_max, json, fixture, budget, output);
    if (*palf) return run_palf(input, json, budget, output);
    if (*alexander) return run_alexander(presentation, weights);
    if (*casson) return run_casson(delta, m, lambda0);
    if (*twist) return run_twist(surface, expr);
  } catch (const mazur::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mazur::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mazur::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
