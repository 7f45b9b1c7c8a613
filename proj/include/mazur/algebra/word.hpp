#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mazur {

// A generator of a free group of known rank: indices are 0..rank-1.
struct Generator {
  int index = 0;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// One signed letter g^{+1} or g^{-1}.
struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  bool cancels(const Letter& o) const { return gen == o.gen && sign == -o.sign; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Element of the free group F(rank), always stored freely reduced.
///
/// The ambient rank travels with the word; combining words of different
/// ranks is a usage error.
class Word {
 public:
  Word() = default;
  explicit Word(int rank);
  Word(int rank, std::vector<Letter> letters);  // reduces
  Word(int rank, std::initializer_list<Letter> letters);

  // g^power (power may be negative or zero).
  static Word generator(int rank, int gen, std::int64_t power = 1);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(std::int64_t k) const;
  Word conjugated_by(const Word& c) const;  // c w c^-1

  // Removes the longest prefix/suffix pair u...u^-1.
  Word cyclically_reduced() const;
  // Rotation by k letters to the left (requires cyclically reduced input
  // for the result to stay reduced; reduction is re-applied regardless).
  Word rotated(std::size_t k) const;
  bool is_conjugate_to(const Word& other) const;

  // Exponent sum per generator.
  std::vector<std::int64_t> exponent_sums() const;
  // Number of occurrences (either sign) of a generator.
  std::size_t occurrences(int gen) const;

  // Substitutes generator i by images[i]; result lives in the images' rank.
  Word substitute(std::span<const Word> images) const;

  // Deletes generator gen (which must not occur) and shifts higher indices down.
  Word drop_generator(int gen) const;

  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex on letters, ranks compared first.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  void reduce();
  void check_rank(const Word& other) const;

  int rank_ = 0;
  std::vector<Letter> letters_;
};

// Renders with names (default x1, x2, ...) and run-length powers, e.g. "x1^2 x2^-1".
// The identity renders as "1".
std::string format_word(const Word& w, std::span<const std::string> names = {});

std::vector<std::string> default_generator_names(int rank);

}  // namespace mazur
