#pragma once

// Random standard curves and mapping classes for the property tests.

#include <algorithm>

#include "random.hpp"

#include "mazur/surface/surface.hpp"

namespace mazur::testing {

// Number of inner holes a hole set passes over (after replacing a set that
// contains the outer hole by its complement).
inline std::size_t skipped_holes(int r, std::vector<int> holes) {
  std::sort(holes.begin(), holes.end());
  if (holes.back() == r) {
    std::vector<int> inner;
    for (int h = 1; h < r; ++h)
      if (!std::binary_search(holes.begin(), holes.end(), h)) inner.push_back(h);
    holes = inner;
  }
  return static_cast<std::size_t>(holes.back() - holes.front() + 1) - holes.size();
}

inline StandardCurve random_standard(std::mt19937& rng, int r) {
  for (;;) {
    std::vector<int> holes;
    for (int h = 1; h <= r; ++h)
      if (uniform(rng, 0, 2) == 0) holes.push_back(h);
    if (holes.empty() || static_cast<int>(holes.size()) == r) continue;
    std::shuffle(holes.begin(), holes.end(), rng);
    StandardCurve c{holes, {}};
    for (std::size_t i = 0; i < skipped_holes(r, holes); ++i) c.sides.push_back(uniform(rng, 0, 1) ? Side::Far : Side::Near);
    return c;
  }
}

inline MappingClass random_mapping_class(std::mt19937& rng, const PlanarSurface& s, int factors) {
  MappingClass m = MappingClass::identity(s.rank());
  for (int i = 0; i < factors; ++i) {
    const MappingClass t = dehn_twist(standard_curve(s, random_standard(rng, s.holes())));
    m = compose(m, uniform(rng, 0, 1) ? t : t.inverse());
  }
  return m;
}

}  // namespace mazur::testing
