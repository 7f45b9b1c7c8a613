#include "curves.hpp"
#include "doctest.h"
#include "random.hpp"

#include "mazur/algebra/errors.hpp"
#include "mazur/surface/surface.hpp"

using namespace mazur;

namespace {

const PlanarSurface s4(4);
const Word x1 = Word::generator(3, 0);
const Word x2 = Word::generator(3, 1);
const Word x3 = Word::generator(3, 2);

using Class = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("planar surface") {
  CHECK(s4.rank() == 3);
  CHECK(s4.boundary_word() == x1 * x2 * x3);
  CHECK(PlanarSurface(1).rank() == 0);
  CHECK_THROWS_AS(PlanarSurface(0), UsageError);
}

TEST_CASE("standard_curve examples") {
  const Curve a = standard_curve(s4, {1});
  CHECK(a.word() == x1);
  CHECK(a.homology_class() == Class{1, 0, 0});

  const Curve b = standard_curve(s4, {1, 2});
  CHECK(b.word() == x1 * x2);
  CHECK(b.homology_class() == Class{1, 1, 0});

  const Curve far = standard_curve(s4, {1, 3}, {Side::Far});
  CHECK(far.word() == x1 * x2 * x3 * x2.inverse());
  CHECK(far.homology_class() == Class{1, 0, 1});
  CHECK(standard_curve(s4, {1, 3}, {Side::Near}).word() == x1 * x3);

  // The outer hole is expressed through delta.
  const Curve outer = standard_curve(s4, {4});
  CHECK(outer.word() == s4.boundary_word().inverse());
  CHECK(outer.homology_class() == Class{-1, -1, -1});
  CHECK(standard_curve(s4, {3, 4}).homology_class() == Class{-1, -1, 0});
  CHECK(format_standard_curve(*far.standard()) == "std{1,3; far}");
}

TEST_CASE("standard_curve errors") {
  CHECK_THROWS_AS(standard_curve(s4, std::vector<int>{}), UsageError);
  CHECK_THROWS_AS(standard_curve(s4, {5}), UsageError);
  CHECK_THROWS_AS(standard_curve(s4, {0}), UsageError);
  CHECK_THROWS_AS(standard_curve(s4, {1, 1}), UsageError);
  CHECK_THROWS_AS(standard_curve(s4, {1, 2, 3, 4}), UsageError);
  CHECK_THROWS_AS(standard_curve(s4, {1, 3}), UsageError);
  CHECK_THROWS_AS(standard_curve(s4, {1, 2}, {Side::Far}), UsageError);
}

TEST_CASE("dehn_twist examples") {
  const MappingClass t1 = dehn_twist(standard_curve(s4, {1}));
  CHECK(t1(x1) == x1);
  const MappingClass t12 = dehn_twist(standard_curve(s4, {1, 2}));
  CHECK(t12(x3) == x3);
  CHECK(t12(x1) == x1.conjugated_by(x1 * x2));
  CHECK(t12(x2) == x2.conjugated_by(x1 * x2));
  CHECK_THROWS_AS(dehn_twist(Curve::from_word(s4, x1 * x2)), UsageError);
  // Image curves go through twist(), not dehn_twist().
  const Curve image = apply(t12, standard_curve(s4, {2, 3}));
  CHECK_THROWS_AS(dehn_twist(image), UsageError);
  CHECK(twist(image) == twist_of_image(t12, standard_curve(s4, {2, 3})));
}

TEST_CASE("twist_of_image examples") {
  const Curve g = standard_curve(s4, {2, 3});
  const Curve b = standard_curve(s4, {1, 2});
  CHECK(twist_of_image(MappingClass::identity(3), g) == dehn_twist(g));
  const MappingClass phi = compose(dehn_twist(g), dehn_twist(b));
  const MappingClass t_g1 = twist_of_image(phi, g);
  const Curve g1 = apply(phi, g);
  CHECK(t_g1(g1.word()) == g1.word());
  CHECK(t_g1 == compose(compose(phi, dehn_twist(g)), phi.inverse()));
}

TEST_CASE("apply and compose examples") {
  const MappingClass t12 = dehn_twist(standard_curve(s4, {1, 2}));
  const Word w = x1 * x3.inverse() * x2;
  CHECK(apply(MappingClass::identity(3), w) == w);
  CHECK(apply(t12, x3) == x3);
  CHECK(compose(t12, t12.inverse()) == MappingClass::identity(3));
  CHECK_THROWS_AS(compose(t12, MappingClass::identity(2)), UsageError);

  const Curve g = standard_curve(s4, {2, 3});
  const Curve b = standard_curve(s4, {1, 2});
  const MappingClass phi = compose(dehn_twist(g), dehn_twist(b));
  CHECK(phi.pow(2) == compose(compose(dehn_twist(g), dehn_twist(b)), compose(dehn_twist(g), dehn_twist(b))));
  for (int n = 0; n <= 5; ++n) {
    const Curve gn = apply(phi.pow(n), g);
    CHECK(gn.homology_class() == g.homology_class());
  }
  CHECK(format_word(apply(phi, g).word()) == "x1 x2 x3 x2 x3^-1 x2^-1 x1^-1 x2 x3 x2^-1");
}

TEST_CASE("lantern relation is conjugation by delta") {
  const MappingClass lantern = compose(compose(dehn_twist(standard_curve(s4, {1, 2})), dehn_twist(standard_curve(s4, {2, 3}))),
                                       dehn_twist(standard_curve(s4, {1, 3}, {Side::Near})));
  CHECK(lantern == MappingClass::inner(s4.boundary_word()));
  // Twists about the inner boundary holes act trivially in this model.
  for (int h = 1; h <= 3; ++h) CHECK(dehn_twist(standard_curve(s4, {h})) == MappingClass::identity(3));
}

TEST_CASE("mapping class invariants are checked") {
  CHECK_THROWS_AS(MappingClass({x1, x1, x3}, {x1, x2, x3}), UsageError);
  CHECK_NOTHROW(MappingClass({x2, x1, x3}, {x2, x1, x3}));
}

TEST_CASE("property: twists are invertible automorphisms preserving delta") {
  std::mt19937 rng(testing::kSeed + 50);
  for (int i = 0; i < testing::kCases; ++i) {
    const PlanarSurface s(testing::uniform(rng, 2, 6));
    const Curve c = standard_curve(s, testing::random_standard(rng, s.holes()));
    const MappingClass t = dehn_twist(c);
    REQUIRE(compose(t, t.inverse()) == MappingClass::identity(s.rank()));
    REQUIRE(compose(t.inverse(), t) == MappingClass::identity(s.rank()));
    REQUIRE(t.preserves_boundary(s));
    REQUIRE(t(c.word()) == c.word());
    const Word w = testing::random_word(rng, s.rank(), 12);
    REQUIRE(t.inverse()(t(w)) == w);
  }
}

TEST_CASE("property: twists about disjoint or nested intervals commute") {
  std::mt19937 rng(testing::kSeed + 51);
  int checked = 0;
  while (checked < testing::kCases) {
    const int r = testing::uniform(rng, 3, 7);
    const PlanarSurface s(r);
    auto interval = [&] {
      const int a = testing::uniform(rng, 1, r);
      const int b = testing::uniform(rng, a, r);
      std::vector<int> h;
      for (int k = a; k <= b; ++k) h.push_back(k);
      return h;
    };
    const auto i1 = interval();
    const auto i2 = interval();
    if (static_cast<int>(i1.size()) == r || static_cast<int>(i2.size()) == r) continue;
    const bool disjoint = i1.back() < i2.front() || i2.back() < i1.front();
    const bool nested = (i1.front() <= i2.front() && i2.back() <= i1.back()) || (i2.front() <= i1.front() && i1.back() <= i2.back());
    if (!disjoint && !nested) continue;
    const MappingClass a = dehn_twist(standard_curve(s, i1));
    const MappingClass b = dehn_twist(standard_curve(s, i2));
    REQUIRE(compose(a, b) == compose(b, a));
    ++checked;
  }
}

TEST_CASE("property: twists act trivially on H1 and preserve conjugacy") {
  std::mt19937 rng(testing::kSeed + 52);
  for (int i = 0; i < testing::kCases; ++i) {
    const PlanarSurface s(testing::uniform(rng, 2, 6));
    const MappingClass t = twist(standard_curve(s, testing::random_standard(rng, s.holes())));
    const Word w = testing::random_word(rng, s.rank(), 15);
    const Word c = testing::random_word(rng, s.rank(), 6);
    REQUIRE(t(w).exponent_sums() == w.exponent_sums());
    REQUIRE(t(w.conjugated_by(c)).is_conjugate_to(t(w)));
  }
}

TEST_CASE("property: twist_of_image conjugates the twist") {
  std::mt19937 rng(testing::kSeed + 53);
  for (int i = 0; i < testing::kCases; ++i) {
    const PlanarSurface s(testing::uniform(rng, 3, 5));
    const MappingClass phi = testing::random_mapping_class(rng, s, testing::uniform(rng, 0, 3));
    const Curve c = standard_curve(s, testing::random_standard(rng, s.holes()));
    const MappingClass t = twist_of_image(phi, c);
    const Word w = testing::random_word(rng, s.rank(), 8);
    REQUIRE(t(phi(w)) == phi(dehn_twist(c)(w)));
    const Curve image = apply(phi, c);
    REQUIRE(t(image.word()) == image.word());
    REQUIRE(twist(image) == t);
    REQUIRE(t.preserves_boundary(s));
  }
}
