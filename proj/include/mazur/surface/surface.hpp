#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mazur/algebra/word.hpp"

namespace mazur {

/// Sphere with `holes` boundary components. Holes 1..r-1 are inner holes and
/// hole r is the outer boundary, which carries the basepoint. pi_1 is free on
/// x_1..x_{r-1}, x_i a loop around inner hole i, and x_1 x_2 ... x_{r-1} is
/// the loop parallel to the outer boundary.
class PlanarSurface {
 public:
  explicit PlanarSurface(int holes);

  int holes() const { return holes_; }
  int rank() const { return holes_ - 1; }
  Word boundary_word() const;

  friend bool operator==(const PlanarSurface&, const PlanarSurface&) = default;

 private:
  int holes_;
};

/// How a standard curve passes a hole it skips over. `Near` runs between the
/// hole and the basepoint; `Far` runs around the far side.
enum class Side { Near, Far };

std::string to_string(Side s);

/// A curve in standard position: it encloses `holes` (1-based; may include
/// the outer hole r) and passes each skipped hole on the given side.
struct StandardCurve {
  std::vector<int> holes;
  std::vector<Side> sides;

  friend bool operator==(const StandardCurve&, const StandardCurve&) = default;
};

std::string format_standard_curve(const StandardCurve& c);

/// Automorphism of pi_1 of the fiber, stored as generator images together with
/// the images of the inverse map. The constructor checks that the two are
/// mutually inverse.
class MappingClass {
 public:
  MappingClass() = default;
  MappingClass(std::vector<Word> images, std::vector<Word> inverse_images);

  static MappingClass identity(int rank);
  // w -> c w c^-1 on every generator.
  static MappingClass inner(const Word& c);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  Word operator()(const Word& w) const;
  MappingClass inverse() const;
  MappingClass pow(std::int64_t k) const;

  // phi(delta) is conjugate to delta.
  bool preserves_boundary(const PlanarSurface& s) const;

  friend bool operator==(const MappingClass& a, const MappingClass& b) { return a.images_ == b.images_; }

 private:
  int rank_ = 0;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

// (phi o psi)(w) = phi(psi(w)).
MappingClass compose(const MappingClass& phi, const MappingClass& psi);

/// Simple closed curve on a planar surface, up to free homotopy. Curves
/// built by standard_curve or by applying a mapping class to one remember how
/// they were made, which is what lets us twist about them.
class Curve {
 public:
  // A bare word with no provenance; it cannot be twisted about.
  static Curve from_word(const PlanarSurface& s, const Word& w);

  const PlanarSurface& surface() const { return surface_; }
  const Word& word() const { return word_; }
  const std::vector<std::int64_t>& homology_class() const { return class_; }
  bool is_null_homologous() const;

  const std::optional<StandardCurve>& standard() const { return standard_; }
  const std::optional<MappingClass>& transform() const { return transform_; }

  // Equality is free homotopy of the underlying words (conjugacy up to
  // orientation is not identified).
  friend bool operator==(const Curve& a, const Curve& b) {
    return a.surface_ == b.surface_ && a.word_.is_conjugate_to(b.word_);
  }

 private:
  friend Curve standard_curve(const PlanarSurface&, std::vector<int>, std::vector<Side>);
  friend Curve apply(const MappingClass&, const Curve&);

  Curve(PlanarSurface s, Word w);

  PlanarSurface surface_;
  Word word_;
  std::vector<std::int64_t> class_;
  std::optional<StandardCurve> standard_;
  std::optional<MappingClass> transform_;
};

// Errors: empty hole set, out-of-range or repeated hole, wrong number of side
// choices, or a hole set that encloses every boundary component.
Curve standard_curve(const PlanarSurface& s, std::vector<int> holes, std::vector<Side> sides = {});
Curve standard_curve(const PlanarSurface& s, const StandardCurve& spec);

/// Positive Dehn twist about a standard curve.
///
/// The curve is first moved by Hurwitz moves to a block of consecutive
/// generators; there the twist sends each enclosed generator x to c x c^-1
/// (c the block product) and fixes the rest. For curves enclosing consecutive
/// inner holes this is literally x_k -> c x_k c^-1. Throws UsageError if the
/// curve is not a standard curve.
MappingClass dehn_twist(const Curve& c);

// phi o t_c o phi^-1, the twist about phi(c).
MappingClass twist_of_image(const MappingClass& phi, const Curve& c);

// Twist about any curve with provenance: standard or the image of one.
MappingClass twist(const Curve& c);

Curve apply(const MappingClass& phi, const Curve& c);
inline Word apply(const MappingClass& phi, const Word& w) { return phi(w); }

}  // namespace mazur
