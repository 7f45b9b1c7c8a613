#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "mazur/algebra/bigint.hpp"

namespace mazur {

/// Integer Laurent polynomial in t. No zero coefficients are stored, so
/// structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(const BigInt& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::int64_t constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(const BigInt& coeff, std::int64_t exponent);
  static LaurentPoly t_power(std::int64_t exponent) { return monomial(1, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(std::int64_t exponent) const;
  // Valid only for nonzero polynomials.
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  BigInt eval_at_one() const;
  // p(t^-1)
  LaurentPoly reflected() const;
  // t^k * p
  LaurentPoly shifted(std::int64_t k) const;
  bool is_symmetric() const { return *this == reflected(); }

  // Exact quotient; throws UsageError when divisor is zero or does not divide.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(std::int64_t exponent, const BigInt& coeff);

  Terms terms_;
};

// Sum of c_i * i * (i - 1): the second derivative evaluated at t = 1.
BigInt second_derivative_at_one(const LaurentPoly& p);

// Canonical ascending-exponent text, e.g. "t^-2 - 2t^-1 + 3 - 2t + t^2".
std::string format_laurent(const LaurentPoly& p);

// True when a and b differ by a unit +-t^k.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace mazur
