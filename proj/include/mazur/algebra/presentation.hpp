#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mazur/algebra/int_matrix.hpp"
#include "mazur/algebra/word.hpp"

namespace mazur {

/// Finite group presentation <x_1..x_g | r_1..r_k>.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(int generators, std::vector<Word> relators = {});

  int generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  int deficiency() const { return generators_ - static_cast<int>(relators_.size()); }

  // generators x relators matrix of exponent sums; column j belongs to relator j.
  IntMatrix exponent_matrix() const;
  AbelianGroup abelianization() const { return cokernel(exponent_matrix()); }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  int generators_ = 0;
  std::vector<Word> relators_;
};

enum class Pi1Verdict { Trivial, Unknown };

std::string to_string(Pi1Verdict v);

struct SimplifyResult {
  Pi1Verdict verdict = Pi1Verdict::Unknown;
  Presentation presentation;
  std::size_t moves = 0;
};

/// Bounded Tietze simplification. Only isomorphism-preserving moves are
/// used, so Trivial is a proof; Unknown is no information.
///
/// Move priority: eliminate a generator that occurs exactly once in some
/// relator; otherwise replace a relator by a shorter product with a
/// conjugate of another relator (or its inverse). Candidates are scanned in
/// relator order so runs are reproducible. Relators are kept cyclically
/// reduced and empty or repeated relators are dropped between moves; that
/// bookkeeping does not consume budget.
SimplifyResult simplify_presentation(const Presentation& p, std::size_t budget);

}  // namespace mazur
