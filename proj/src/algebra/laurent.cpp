#include "mazur/algebra/laurent.hpp"

#include "mazur/algebra/errors.hpp"

namespace mazur {

LaurentPoly::LaurentPoly(const BigInt& constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, std::int64_t exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(std::int64_t exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coefficient(std::int64_t exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no exponents");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  }
  return p;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw UsageError("division by the zero polynomial");
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const auto [lead_e, lead_c] = *divisor.terms_.rbegin();
  const std::int64_t low = divisor.min_exponent();
  while (!rem.is_zero()) {
    const auto [re, rc] = *rem.terms_.rbegin();
    // Once the remainder's span is narrower than the divisor's, no further
    // monomial quotient can cancel it.
    if (re - rem.min_exponent() < lead_e - low || rc % lead_c != 0) {
      throw UsageError("polynomial division is not exact");
    }
    const auto step = monomial(rc / lead_c, re - lead_e);
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

BigInt second_derivative_at_one(const LaurentPoly& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += c * BigInt(e) * BigInt(e - 1);
  return s;
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const LaurentPoly shifted = b.shifted(a.min_exponent() - b.min_exponent());
  return shifted == a || -shifted == a;
}

std::string format_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += 't';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace mazur
