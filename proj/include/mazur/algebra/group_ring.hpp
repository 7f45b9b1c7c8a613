#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "mazur/algebra/bigint.hpp"
#include "mazur/algebra/laurent.hpp"
#include "mazur/algebra/word.hpp"

namespace mazur {

/// Element of the integral group ring Z[F(rank)]: a finite integer
/// combination of reduced words. Zero coefficients are never stored.
class GroupRingElement {
 public:
  using Terms = std::map<Word, BigInt>;

  explicit GroupRingElement(int rank = 0) : rank_(rank) {}
  GroupRingElement(const Word& w, const BigInt& coeff = 1);  // NOLINT(google-explicit-constructor)

  static GroupRingElement one(int rank) { return GroupRingElement(Word(rank)); }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Word& w) const;

  void add_term(const Word& w, const BigInt& coeff);

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  int rank_;
  Terms terms_;
};

// Free differential: d(gen)/d(gen) = 1, d(gen^-1)/d(gen) = -gen^-1,
// d(uv) = du + u dv.
GroupRingElement fox_derivative(const Word& w, Generator g);

// Sends each word to t^(sum of weight[gen] * exponent).
LaurentPoly abelianize(const GroupRingElement& e, std::span<const std::int64_t> weights);
LaurentPoly abelianize(const Word& w, std::span<const std::int64_t> weights);

std::string format_group_ring(const GroupRingElement& e, std::span<const std::string> names = {});

}  // namespace mazur
