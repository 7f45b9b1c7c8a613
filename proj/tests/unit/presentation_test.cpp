#include "doctest.h"
#include "random.hpp"

#include "mazur/algebra/errors.hpp"
#include "mazur/algebra/presentation.hpp"

using namespace mazur;

namespace {

const Word x = Word::generator(2, 0);
const Word y = Word::generator(2, 1);

}  // namespace

TEST_CASE("presentation basics") {
  const Presentation p(2, {x * y * x.inverse() * y.inverse()});
  CHECK(p.deficiency() == 1);
  CHECK(p.exponent_matrix() == IntMatrix{{0}, {0}});
  CHECK(format_group(p.abelianization()) == "Z^2");
  CHECK(format_group(Presentation(2, {x * x, y}).abelianization()) == "Z/2");
}

TEST_CASE("simplify_presentation examples") {
  const Word x1 = Word::generator(1, 0);
  CHECK(simplify_presentation(Presentation(1, {x1}), 10).verdict == Pi1Verdict::Trivial);
  CHECK(simplify_presentation(Presentation(2, {x * y, y}), 10).verdict == Pi1Verdict::Trivial);
  CHECK(simplify_presentation(Presentation(2, {x * y * x.inverse() * y.inverse()}), 100).verdict == Pi1Verdict::Unknown);
  CHECK(to_string(Pi1Verdict::Trivial) == "trivial");
  CHECK(to_string(Pi1Verdict::Unknown) == "unknown");
  CHECK_THROWS_AS(simplify_presentation(Presentation(1, {x1}), 0), UsageError);
}

TEST_CASE("simplification needing relator multiplication") {
  // <x, y | x^2 y, x^3 y^2>: no generator occurs once in the second relator but
  // the first one eliminates y and leaves x^-1.
  const Presentation p(2, {x * x * y, x.pow(3) * y.pow(2)});
  const auto r = simplify_presentation(p, 50);
  CHECK(r.verdict == Pi1Verdict::Trivial);
  CHECK(r.moves >= 1);
}

TEST_CASE("budget is respected") {
  const Presentation p(2, {x * y, y});
  const auto r = simplify_presentation(p, 1);
  CHECK(r.moves <= 1);
  CHECK(r.verdict == Pi1Verdict::Unknown);
}

TEST_CASE("property: simplification preserves the abelianization and is sound") {
  std::mt19937 rng(testing::kSeed + 40);
  int trivial = 0;
  for (int i = 0; i < testing::kCases; ++i) {
    const int gens = testing::uniform(rng, 1, 3);
    const int rels = testing::uniform(rng, 0, 3);
    std::vector<Word> relators;
    for (int k = 0; k < rels; ++k) relators.push_back(testing::random_word(rng, gens, 8));
    const Presentation p(gens, relators);
    const auto r = simplify_presentation(p, 40);
    REQUIRE(r.presentation.abelianization() == p.abelianization());
    if (r.verdict == Pi1Verdict::Trivial) {
      ++trivial;
      REQUIRE(p.abelianization().is_trivial());
      REQUIRE(r.presentation.generators() == 0);
    }
  }
  CHECK(trivial > 0);
}
