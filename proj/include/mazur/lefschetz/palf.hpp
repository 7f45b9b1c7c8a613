#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mazur/algebra/int_matrix.hpp"
#include "mazur/algebra/presentation.hpp"
#include "mazur/surface/surface.hpp"

namespace mazur {

/// Positive Lefschetz fibration over the disk with planar fiber, given by
/// its ordered vanishing cycles. The total space is the handlebody
/// 0-handle + (r-1) 1-handles + one 2-handle per cycle.
struct PALFSpec {
  PlanarSurface fiber{1};
  std::vector<Curve> vanishing_cycles;

  friend bool operator==(const PALFSpec&, const PALFSpec&) = default;
};

struct Allowability {
  bool allowable = true;
  std::optional<std::size_t> first_null_homologous;
};

// Every vanishing cycle is homologically nontrivial in the fiber.
Allowability allowable(const PALFSpec& p);

// (r-1) x m; column i is the homology class of cycle i.
IntMatrix boundary_matrix(const PALFSpec& p);

struct HomologyResult {
  AbelianGroup h0;
  AbelianGroup h1;
  AbelianGroup h2;
  long long euler = 0;

  bool is_point() const;
  // "Z,0,0" style summary of H0,H1,H2.
  std::string summary() const;
};

HomologyResult homology(const PALFSpec& p);

// m == r-1 and det(boundary matrix) = +-1, i.e. the total space is a
// homology ball and its boundary a homology sphere.
bool boundary_is_homology_sphere(const PALFSpec& p);

// <x_1..x_{r-1} | cycle words>
Presentation pi1_presentation(const PALFSpec& p);

// t_{c_1} o t_{c_2} o ... o t_{c_m}; the identity for an empty monodromy.
MappingClass total_monodromy(const PALFSpec& p);

/// Standard-position curves alpha, beta, gamma on the 4-holed sphere that
/// seed the family. X_n has monodromy (t_alpha, t_beta, t_{gamma_n}) with
/// gamma_n = (t_gamma t_beta)^n (gamma).
struct FamilyFixture {
  StandardCurve alpha;
  StandardCurve beta;
  StandardCurve gamma;

  friend bool operator==(const FamilyFixture&, const FamilyFixture&) = default;
};

// alpha = std{1}, beta = std{1,2}, gamma = std{2,3}.
const FamilyFixture& calibrated_family_fixture();

// n = 0 is allowed as a diagnostic (third cycle is gamma itself).
PALFSpec family_palf(int n, const FamilyFixture& fixture = calibrated_family_fixture());

}  // namespace mazur
