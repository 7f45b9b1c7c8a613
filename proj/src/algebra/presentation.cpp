#include "mazur/algebra/presentation.hpp"

#include <algorithm>
#include <optional>

#include "mazur/algebra/errors.hpp"

namespace mazur {

Presentation::Presentation(int generators, std::vector<Word> relators)
    : generators_(generators), relators_(std::move(relators)) {
  if (generators < 0) throw UsageError("negative generator count");
  for (const auto& r : relators_) {
    if (r.rank() != generators_) throw UsageError("relator rank differs from generator count");
  }
}

IntMatrix Presentation::exponent_matrix() const {
  IntMatrix m(static_cast<std::size_t>(generators_), relators_.size());
  for (std::size_t j = 0; j < relators_.size(); ++j) {
    const auto sums = relators_[j].exponent_sums();
    for (std::size_t i = 0; i < sums.size(); ++i) m(i, j) = sums[i];
  }
  return m;
}

std::string to_string(Pi1Verdict v) { return v == Pi1Verdict::Trivial ? "trivial" : "unknown"; }

namespace {

// Cyclically reduce, drop empty relators, drop repeats up to cyclic
// permutation and inversion, then sort.
void normalize(std::vector<Word>& relators) {
  std::vector<Word> kept;
  for (const auto& r : relators) {
    Word c = r.cyclically_reduced();
    if (c.is_identity()) continue;
    const bool repeat = std::any_of(kept.begin(), kept.end(), [&](const Word& k) {
      return k.is_conjugate_to(c) || k.is_conjugate_to(c.inverse());
    });
    if (!repeat) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  relators = std::move(kept);
}

struct Elimination {
  std::size_t relator;
  int gen;
};

std::optional<Elimination> find_elimination(const std::vector<Word>& relators, int generators) {
  for (std::size_t i = 0; i < relators.size(); ++i) {
    for (int g = 0; g < generators; ++g) {
      if (relators[i].occurrences(g) == 1) return Elimination{i, g};
    }
  }
  return std::nullopt;
}

// Solve relator for gen and substitute it away everywhere.
void eliminate(int& generators, std::vector<Word>& relators, const Elimination& e) {
  const Word& r = relators[e.relator];
  const auto letters = r.letters();
  std::size_t pos = 0;
  while (letters[pos].gen != e.gen) ++pos;
  // r ~ g^s * rest, so g = rest^-1 when s = +1 and g = rest when s = -1.
  const Word rotated = r.rotated(pos);
  const int sign = letters[pos].sign;
  const Word rest(generators, std::vector<Letter>(rotated.letters().begin() + 1, rotated.letters().end()));
  const Word value = sign > 0 ? rest.inverse() : rest;

  std::vector<Word> images;
  for (int g = 0; g < generators; ++g) {
    images.push_back(g == e.gen ? value : Word::generator(generators, g));
  }
  std::vector<Word> next;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i == e.relator) continue;
    next.push_back(relators[i].substitute(images).drop_generator(e.gen));
  }
  relators = std::move(next);
  --generators;
}

struct Multiplication {
  std::size_t target;
  Word replacement;
};

std::optional<Multiplication> find_multiplication(const std::vector<Word>& relators) {
  std::optional<Multiplication> best;
  std::size_t best_gain = 0;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    const Word& ri = relators[i];
    for (std::size_t j = 0; j < relators.size(); ++j) {
      if (i == j) continue;
      for (const Word& rj : {relators[j], relators[j].inverse()}) {
        for (std::size_t a = 0; a < ri.length(); ++a) {
          const Word lhs = ri.rotated(a);
          for (std::size_t b = 0; b < rj.length(); ++b) {
            const Word candidate = (lhs * rj.rotated(b)).cyclically_reduced();
            if (candidate.length() >= ri.length()) continue;
            const std::size_t gain = ri.length() - candidate.length();
            if (gain > best_gain) {
              best_gain = gain;
              best = Multiplication{i, candidate};
            }
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

SimplifyResult simplify_presentation(const Presentation& p, std::size_t budget) {
  if (budget == 0) throw UsageError("simplification budget must be positive");
  int generators = p.generators();
  std::vector<Word> relators = p.relators();
  std::size_t moves = 0;
  normalize(relators);
  while (generators > 0 && moves < budget) {
    if (auto e = find_elimination(relators, generators)) {
      eliminate(generators, relators, *e);
    } else if (auto m = find_multiplication(relators)) {
      relators[m->target] = m->replacement;
    } else {
      break;
    }
    ++moves;
    normalize(relators);
  }
  SimplifyResult result;
  result.verdict = generators == 0 ? Pi1Verdict::Trivial : Pi1Verdict::Unknown;
  result.presentation = Presentation(generators, std::move(relators));
  result.moves = moves;
  return result;
}

}  // namespace mazur
