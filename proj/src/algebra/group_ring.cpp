#include "mazur/algebra/group_ring.hpp"

#include "mazur/algebra/errors.hpp"

namespace mazur {

GroupRingElement::GroupRingElement(const Word& w, const BigInt& coeff) : rank_(w.rank()) {
  add_term(w, coeff);
}

BigInt GroupRingElement::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void GroupRingElement::add_term(const Word& w, const BigInt& coeff) {
  if (w.rank() != rank_) throw UsageError("group ring rank mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement e = *this;
  for (auto& [w, c] : e.terms_) c = -c;
  return e;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  if (rhs.rank_ != rank_) throw UsageError("group ring rank mismatch");
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  if (rhs.rank_ != rank_) throw UsageError("group ring rank mismatch");
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.rank_ != b.rank_) throw UsageError("group ring rank mismatch");
  GroupRingElement out(a.rank_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, Generator g) {
  if (g.index < 0 || g.index >= w.rank()) {
    throw UsageError("Fox derivative with respect to a generator outside the ambient rank");
  }
  GroupRingElement d(w.rank());
  Word prefix(w.rank());
  for (const auto& l : w.letters()) {
    const Word letter(w.rank(), {l});
    if (l.gen == g.index) {
      if (l.sign > 0) {
        d.add_term(prefix, 1);
      } else {
        d.add_term(prefix * letter, -1);
      }
    }
    prefix *= letter;
  }
  return d;
}

LaurentPoly abelianize(const Word& w, std::span<const std::int64_t> weights) {
  if (weights.size() < static_cast<std::size_t>(w.rank())) {
    throw UsageError("abelianization needs a weight for every generator");
  }
  std::int64_t e = 0;
  for (const auto& l : w.letters()) e += l.sign * weights[static_cast<std::size_t>(l.gen)];
  return LaurentPoly::t_power(e);
}

LaurentPoly abelianize(const GroupRingElement& e, std::span<const std::int64_t> weights) {
  LaurentPoly p;
  for (const auto& [w, c] : e.terms()) p += LaurentPoly(c) * abelianize(w, weights);
  return p;
}

std::string format_group_ring(const GroupRingElement& e, std::span<const std::string> names) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.is_identity()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += format_word(w, names);
    }
  }
  return out;
}

}  // namespace mazur
