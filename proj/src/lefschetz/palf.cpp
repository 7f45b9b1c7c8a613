#include "mazur/lefschetz/palf.hpp"

#include "mazur/algebra/errors.hpp"

namespace mazur {

Allowability allowable(const PALFSpec& p) {
  for (std::size_t i = 0; i < p.vanishing_cycles.size(); ++i) {
    if (p.vanishing_cycles[i].is_null_homologous()) return {false, i};
  }
  return {};
}

IntMatrix boundary_matrix(const PALFSpec& p) {
  const auto rows = static_cast<std::size_t>(p.fiber.rank());
  IntMatrix m(rows, p.vanishing_cycles.size());
  for (std::size_t j = 0; j < p.vanishing_cycles.size(); ++j) {
    const auto& cls = p.vanishing_cycles[j].homology_class();
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cls[i];
  }
  return m;
}

bool HomologyResult::is_point() const {
  return h0 == AbelianGroup{1, {}} && h1.is_trivial() && h2.is_trivial();
}

std::string HomologyResult::summary() const {
  return format_group(h0) + "," + format_group(h1) + "," + format_group(h2);
}

HomologyResult homology(const PALFSpec& p) {
  const IntMatrix d2 = boundary_matrix(p);
  const SmithForm snf = smith_normal_form(d2);
  const std::size_t rank = snf.rank();

  HomologyResult h;
  h.h0 = {1, {}};
  h.h1.free_rank = d2.rows() - rank;
  for (const auto& f : snf.invariant_factors()) {
    if (f != 1) h.h1.torsion.push_back(f);
  }
  h.h2.free_rank = d2.cols() - rank;
  h.euler = 1 - static_cast<long long>(d2.rows()) + static_cast<long long>(d2.cols());

  const long long from_groups =
      1 - static_cast<long long>(h.h1.free_rank) + static_cast<long long>(h.h2.free_rank);
  if (from_groups != h.euler) throw VerificationError("Euler characteristic mismatch");
  return h;
}

bool boundary_is_homology_sphere(const PALFSpec& p) {
  if (p.vanishing_cycles.size() != static_cast<std::size_t>(p.fiber.rank())) return false;
  const BigInt det = boundary_matrix(p).determinant();
  return det == 1 || det == -1;
}

Presentation pi1_presentation(const PALFSpec& p) {
  std::vector<Word> relators;
  relators.reserve(p.vanishing_cycles.size());
  for (const auto& c : p.vanishing_cycles) relators.push_back(c.word());
  return Presentation(p.fiber.rank(), std::move(relators));
}

MappingClass total_monodromy(const PALFSpec& p) {
  MappingClass m = MappingClass::identity(p.fiber.rank());
  for (const auto& c : p.vanishing_cycles) m = compose(m, twist(c));
  return m;
}

const FamilyFixture& calibrated_family_fixture() {
  static const FamilyFixture fixture{{{1}, {}}, {{1, 2}, {}}, {{2, 3}, {}}};
  return fixture;
}

PALFSpec family_palf(int n, const FamilyFixture& fixture) {
  if (n < 0) throw UsageError("family index must be nonnegative");
  const PlanarSurface fiber(4);
  const Curve alpha = standard_curve(fiber, fixture.alpha);
  const Curve beta = standard_curve(fiber, fixture.beta);
  const Curve gamma = standard_curve(fiber, fixture.gamma);
  const MappingClass step = compose(dehn_twist(gamma), dehn_twist(beta));
  return PALFSpec{fiber, {alpha, beta, apply(step.pow(n), gamma)}};
}

}  // namespace mazur
