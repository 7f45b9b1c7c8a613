#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mazur/algebra/laurent.hpp"
#include "mazur/algebra/presentation.hpp"
#include "mazur/lefschetz/palf.hpp"
#include "mazur/surface/surface.hpp"

namespace mazur {

// Text grammars; docs/grammar.md has the full EBNF. Every parser throws
// ParseError (1-based line/column) on malformed input.

struct NamedPresentation {
  Presentation presentation;
  std::vector<std::string> names;
};

// "x y | (x y)^2 x (x y)^-2 y^-1, x^3"
NamedPresentation parse_presentation(std::string_view text);
// Canonical form; parse_presentation(format_presentation(p)) gives back p.
std::string format_presentation(const NamedPresentation& p);

// "t^-2 - 2t^-1 + 3 - 2t + t^2"; also accepts '*' between coefficient and t.
LaurentPoly parse_laurent(std::string_view text);

// "S(0,4)"
PlanarSurface parse_surface(std::string_view text);

// "std{1,3; far}"
StandardCurve parse_standard_curve(std::string_view text);

/// Monodromy file:
///
///   S(0,4);
///   curve b = std{1,2};
///   curve g = std{2,3};
///   T std{1}; T b; T apply((Tg Tb)^3, g);
PALFSpec parse_monodromy(std::string_view text);

// Same file format; must define curves alpha, beta and gamma as standard
// curves on S(0,4). Twist statements are not allowed.
FamilyFixture parse_family_fixture(std::string_view text);

// A curve expression (printed as a word) or a mapping-class expression
// (printed as generator images), evaluated on the given surface.
std::variant<Curve, MappingClass> parse_twist_expression(const PlanarSurface& s, std::string_view text);

}  // namespace mazur
