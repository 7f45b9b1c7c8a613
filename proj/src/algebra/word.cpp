#include "mazur/algebra/word.hpp"

#include <algorithm>

#include "mazur/algebra/errors.hpp"

namespace mazur {

Word::Word(int rank) : rank_(rank) {
  if (rank < 0) throw UsageError("negative free-group rank");
}

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
  if (rank < 0) throw UsageError("negative free-group rank");
  for (const auto& l : letters_) {
    if (l.gen < 0 || l.gen >= rank_) {
      throw UsageError("generator index " + std::to_string(l.gen) + " outside rank " +
                       std::to_string(rank_));
    }
    if (l.sign != 1 && l.sign != -1) throw UsageError("letter sign must be +1 or -1");
  }
  reduce();
}

Word::Word(int rank, std::initializer_list<Letter> letters)
    : Word(rank, std::vector<Letter>(letters)) {}

Word Word::generator(int rank, int gen, std::int64_t power) {
  if (gen < 0 || gen >= rank) throw UsageError("generator index outside ambient rank");
  Word w(rank);
  const Letter l{gen, power < 0 ? -1 : 1};
  const auto n = static_cast<std::size_t>(power < 0 ? -power : power);
  w.letters_.assign(n, l);
  return w;
}

void Word::reduce() {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters_ = std::move(out);
}

void Word::check_rank(const Word& other) const {
  if (rank_ != other.rank_) {
    throw UsageError("free-group rank mismatch: " + std::to_string(rank_) + " vs " +
                     std::to_string(other.rank_));
  }
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(std::int64_t k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out(rank_);
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

Word Word::conjugated_by(const Word& c) const { return c * *this * c.inverse(); }

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  out *= rhs;
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  check_rank(rhs);
  for (const auto& l : rhs.letters_) {
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  return *this;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo].cancels(letters_[hi - 1])) {
    ++lo;
    --hi;
  }
  Word w(rank_);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                    letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  std::vector<Letter> v(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
  v.insert(v.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(rank_, std::move(v));
}

bool Word::is_conjugate_to(const Word& other) const {
  check_rank(other);
  const Word a = cyclically_reduced();
  const Word b = other.cyclically_reduced();
  if (a.length() != b.length()) return false;
  if (a.length() == 0) return true;
  std::vector<Letter> doubled(a.letters_);
  doubled.insert(doubled.end(), a.letters_.begin(), a.letters_.end());
  return std::search(doubled.begin(), doubled.end(), b.letters_.begin(), b.letters_.end()) !=
         doubled.end();
}

std::vector<std::int64_t> Word::exponent_sums() const {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(rank_), 0);
  for (const auto& l : letters_) sums[static_cast<std::size_t>(l.gen)] += l.sign;
  return sums;
}

std::size_t Word::occurrences(int gen) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [gen](const Letter& l) { return l.gen == gen; }));
}

Word Word::substitute(std::span<const Word> images) const {
  if (images.size() != static_cast<std::size_t>(rank_)) {
    throw UsageError("substitution needs one image per generator");
  }
  const int target = images.empty() ? 0 : images.front().rank();
  std::vector<Word> inverses;
  inverses.reserve(images.size());
  for (const auto& im : images) {
    if (im.rank() != target) throw UsageError("substitution images have mixed ranks");
    inverses.push_back(im.inverse());
  }
  Word out(target);
  for (const auto& l : letters_) {
    const auto i = static_cast<std::size_t>(l.gen);
    out *= l.sign > 0 ? images[i] : inverses[i];
  }
  return out;
}

Word Word::drop_generator(int gen) const {
  if (gen < 0 || gen >= rank_) throw UsageError("generator index outside ambient rank");
  Word w(rank_ - 1);
  w.letters_.reserve(letters_.size());
  for (auto l : letters_) {
    if (l.gen == gen) throw UsageError("cannot drop a generator that occurs in the word");
    if (l.gen > gen) --l.gen;
    w.letters_.push_back(l);
  }
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::vector<std::string> default_generator_names(int rank) {
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.is_identity()) return "1";
  std::vector<std::string> fallback;
  if (names.size() < static_cast<std::size_t>(w.rank())) {
    fallback = default_generator_names(w.rank());
    names = fallback;
  }
  std::string out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += names[static_cast<std::size_t>(letters[i].gen)];
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace mazur
