#include "mazur/surface/surface.hpp"

#include <algorithm>

#include "mazur/algebra/errors.hpp"

namespace mazur {

PlanarSurface::PlanarSurface(int holes) : holes_(holes) {
  if (holes < 1) throw UsageError("a planar surface needs at least one boundary component");
}

Word PlanarSurface::boundary_word() const {
  Word d(rank());
  for (int i = 0; i < rank(); ++i) d *= Word::generator(rank(), i);
  return d;
}

std::string to_string(Side s) { return s == Side::Near ? "near" : "far"; }

std::string format_standard_curve(const StandardCurve& c) {
  std::string out = "std{";
  for (std::size_t i = 0; i < c.holes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.holes[i]);
  }
  if (!c.sides.empty()) {
    out += ";";
    for (const auto s : c.sides) out += " " + to_string(s);
  }
  return out + "}";
}

// --- MappingClass -----------------------------------------------------------

MappingClass::MappingClass(std::vector<Word> images, std::vector<Word> inverse_images)
    : rank_(static_cast<int>(images.size())),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
  if (inverse_images_.size() != images_.size()) {
    throw UsageError("mapping class needs inverse images for every generator");
  }
  for (int g = 0; g < rank_; ++g) {
    const Word x = Word::generator(rank_, g);
    const auto i = static_cast<std::size_t>(g);
    if (images_[i].rank() != rank_ || inverse_images_[i].rank() != rank_) {
      throw UsageError("mapping class images must live in the same free group");
    }
    if (inverse_images_[i].substitute(images_) != x || images_[i].substitute(inverse_images_) != x) {
      throw UsageError("inverse witness does not invert the mapping class");
    }
  }
}

MappingClass MappingClass::identity(int rank) {
  std::vector<Word> gens;
  for (int g = 0; g < rank; ++g) gens.push_back(Word::generator(rank, g));
  MappingClass m;
  m.rank_ = rank;
  m.images_ = gens;
  m.inverse_images_ = std::move(gens);
  return m;
}

MappingClass MappingClass::inner(const Word& c) {
  MappingClass m;
  m.rank_ = c.rank();
  const Word ci = c.inverse();
  for (int g = 0; g < c.rank(); ++g) {
    const Word x = Word::generator(c.rank(), g);
    m.images_.push_back(c * x * ci);
    m.inverse_images_.push_back(ci * x * c);
  }
  return m;
}

Word MappingClass::operator()(const Word& w) const {
  if (w.rank() != rank_) throw UsageError("word and mapping class live on different surfaces");
  return w.substitute(images_);
}

MappingClass MappingClass::inverse() const {
  MappingClass m;
  m.rank_ = rank_;
  m.images_ = inverse_images_;
  m.inverse_images_ = images_;
  return m;
}

MappingClass MappingClass::pow(std::int64_t k) const {
  const MappingClass base = k < 0 ? inverse() : *this;
  MappingClass out = identity(rank_);
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = compose(out, base);
  return out;
}

bool MappingClass::preserves_boundary(const PlanarSurface& s) const {
  const Word d = s.boundary_word();
  return (*this)(d).is_conjugate_to(d);
}

MappingClass compose(const MappingClass& phi, const MappingClass& psi) {
  if (phi.rank() != psi.rank()) throw UsageError("composing mapping classes of different surfaces");
  std::vector<Word> images;
  std::vector<Word> inverses;
  for (const auto& w : psi.images()) images.push_back(w.substitute(phi.images()));
  for (const auto& w : phi.inverse_images()) inverses.push_back(w.substitute(psi.inverse_images()));
  return MappingClass(std::move(images), std::move(inverses));
}

// --- Curves -----------------------------------------------------------------

Curve::Curve(PlanarSurface s, Word w) : surface_(s), word_(std::move(w)) {
  if (word_.rank() != surface_.rank()) throw UsageError("curve word does not live on the surface");
  class_ = word_.exponent_sums();
}

Curve Curve::from_word(const PlanarSurface& s, const Word& w) { return Curve(s, w); }

bool Curve::is_null_homologous() const {
  return std::all_of(class_.begin(), class_.end(), [](std::int64_t v) { return v == 0; });
}

namespace {

// Hurwitz move at position i: (a, b) -> (a b a^-1, a). Passing the second
// element leftwards over the first along the far side of its hole.
MappingClass hurwitz_far(int rank, int i) {
  std::vector<Word> images;
  std::vector<Word> inverses;
  for (int g = 0; g < rank; ++g) {
    images.push_back(Word::generator(rank, g));
    inverses.push_back(Word::generator(rank, g));
  }
  const Word a = Word::generator(rank, i);
  const Word b = Word::generator(rank, i + 1);
  images[static_cast<std::size_t>(i)] = a * b * a.inverse();
  images[static_cast<std::size_t>(i + 1)] = a;
  inverses[static_cast<std::size_t>(i)] = b;
  inverses[static_cast<std::size_t>(i + 1)] = b.inverse() * a * b;
  return MappingClass(std::move(images), std::move(inverses));
}

struct AdaptedBasis {
  MappingClass change;  // x_pos -> element of a geometric basis
  int block_begin = 0;
  int block_size = 0;
};

// Inner-hole curve: gather the enclosed holes into a consecutive block of a
// geometric basis by Hurwitz moves.
AdaptedBasis adapt(const PlanarSurface& s, const std::vector<int>& enclosed, const std::vector<Side>& sides) {
  const int rank = s.rank();
  std::vector<int> label(static_cast<std::size_t>(rank));
  for (int p = 0; p < rank; ++p) label[static_cast<std::size_t>(p)] = p + 1;

  std::vector<int> skipped;
  for (int h = enclosed.front() + 1; h < enclosed.back(); ++h) {
    if (!std::binary_search(enclosed.begin(), enclosed.end(), h)) skipped.push_back(h);
  }
  if (sides.size() != skipped.size()) {
    throw UsageError("curve skips " + std::to_string(skipped.size()) + " hole(s) but " +
                     std::to_string(sides.size()) + " side choice(s) were given");
  }
  auto side_of = [&](int hole) {
    const auto it = std::find(skipped.begin(), skipped.end(), hole);
    return sides[static_cast<std::size_t>(it - skipped.begin())];
  };

  MappingClass change = MappingClass::identity(rank);
  int block_end = enclosed.front() - 1;  // position of the last gathered hole
  for (std::size_t j = 1; j < enclosed.size(); ++j) {
    int p = enclosed[j] - 1;
    while (p > block_end + 1) {
      const MappingClass far = hurwitz_far(rank, p - 1);
      const bool is_far = side_of(label[static_cast<std::size_t>(p - 1)]) == Side::Far;
      change = compose(change, is_far ? far : far.inverse());
      std::swap(label[static_cast<std::size_t>(p - 1)], label[static_cast<std::size_t>(p)]);
      --p;
    }
    block_end = p;
  }
  return {change, enclosed.front() - 1, static_cast<int>(enclosed.size())};
}

// The inner-hole description of a standard curve: for curves enclosing the
// outer hole, the complementary inner holes (and the word is inverted).
struct InnerForm {
  std::vector<int> holes;
  bool inverted = false;
};

InnerForm inner_form(const PlanarSurface& s, std::vector<int> holes) {
  if (holes.empty()) throw UsageError("a standard curve must enclose at least one hole");
  std::sort(holes.begin(), holes.end());
  if (std::adjacent_find(holes.begin(), holes.end()) != holes.end()) {
    throw UsageError("repeated hole index in curve");
  }
  if (holes.front() < 1 || holes.back() > s.holes()) {
    throw UsageError("hole index out of range 1.." + std::to_string(s.holes()));
  }
  if (holes.back() != s.holes()) return {holes, false};
  InnerForm f{{}, true};
  for (int h = 1; h < s.holes(); ++h) {
    if (!std::binary_search(holes.begin(), holes.end(), h)) f.holes.push_back(h);
  }
  if (f.holes.empty()) throw UsageError("a curve enclosing every hole bounds a disk");
  return f;
}

// Positive twists act on their block by x -> c x c^-1; see the lantern
// calibration in the tests.
MappingClass block_twist(int rank, int begin, int size) {
  Word c(rank);
  for (int p = begin; p < begin + size; ++p) c *= Word::generator(rank, p);
  const Word ci = c.inverse();
  MappingClass ident = MappingClass::identity(rank);
  std::vector<Word> images = ident.images();
  std::vector<Word> inverses = ident.inverse_images();
  for (int p = begin; p < begin + size; ++p) {
    const auto i = static_cast<std::size_t>(p);
    images[i] = c * images[i] * ci;
    inverses[i] = ci * inverses[i] * c;
  }
  return MappingClass(std::move(images), std::move(inverses));
}

Word block_word(int rank, int begin, int size) {
  Word c(rank);
  for (int p = begin; p < begin + size; ++p) c *= Word::generator(rank, p);
  return c;
}

}  // namespace

Curve standard_curve(const PlanarSurface& s, std::vector<int> holes, std::vector<Side> sides) {
  StandardCurve spec{holes, sides};
  const InnerForm f = inner_form(s, std::move(holes));
  const AdaptedBasis basis = adapt(s, f.holes, sides);
  Word w = basis.change(block_word(s.rank(), basis.block_begin, basis.block_size));
  if (f.inverted) w = w.inverse();
  Curve c(s, std::move(w));
  c.standard_ = std::move(spec);
  return c;
}

Curve standard_curve(const PlanarSurface& s, const StandardCurve& spec) {
  return standard_curve(s, spec.holes, spec.sides);
}

MappingClass dehn_twist(const Curve& c) {
  if (!c.standard() || c.transform()) {
    throw UsageError("curve is not in standard position; twist about it with twist_of_image");
  }
  const PlanarSurface& s = c.surface();
  const InnerForm f = inner_form(s, c.standard()->holes);
  const AdaptedBasis basis = adapt(s, f.holes, c.standard()->sides);
  return compose(compose(basis.change, block_twist(s.rank(), basis.block_begin, basis.block_size)),
                 basis.change.inverse());
}

MappingClass twist_of_image(const MappingClass& phi, const Curve& c) {
  return compose(compose(phi, twist(c)), phi.inverse());
}

MappingClass twist(const Curve& c) {
  if (!c.standard()) throw UsageError("curve has no provenance; cannot twist about a bare word");
  if (!c.transform()) return dehn_twist(c);
  return twist_of_image(*c.transform(), standard_curve(c.surface(), *c.standard()));
}

Curve apply(const MappingClass& phi, const Curve& c) {
  if (phi.rank() != c.surface().rank()) throw UsageError("mapping class and curve live on different surfaces");
  Curve out(c.surface(), phi(c.word()));
  out.standard_ = c.standard_;
  if (c.standard_) out.transform_ = c.transform_ ? compose(phi, *c.transform_) : phi;
  return out;
}

}  // namespace mazur
