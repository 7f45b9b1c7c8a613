#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mazur/algebra/bigint.hpp"
#include "mazur/algebra/laurent.hpp"
#include "mazur/algebra/presentation.hpp"

namespace mazur {

/// Alexander polynomial of a deficiency-one presentation, via the matrix of
/// abelianized Fox derivatives with one column deleted. `weights` gives the
/// image of each generator in Z = <t>; every relator must have weighted
/// exponent sum zero and the weights must generate Z.
///
/// The result is made canonical up to units: lowest exponent 0 and
/// p(1) > 0 (or leading coefficient > 0 when p(1) = 0). All deletable
/// columns are cross-checked against each other.
LaurentPoly alexander_from_presentation(const Presentation& p, std::span<const std::int64_t> weights);

/// Symmetric representative of an Alexander polynomial: p(t) = p(t^-1) and p(1) = 1.
class NormalizedAlexander {
 public:
  NormalizedAlexander() : poly_(1) {}

  // Multiplies by the unique unit +-t^k achieving the normal form; throws
  // UsageError when no unit does (p(1) != +-1 or p not symmetric up to units).
  static NormalizedAlexander normalize(const LaurentPoly& p);

  const LaurentPoly& poly() const { return poly_; }
  int sign() const { return sign_; }
  std::int64_t shift() const { return shift_; }
  BigInt second_derivative_at_one() const { return mazur::second_derivative_at_one(poly_); }

  friend bool operator==(const NormalizedAlexander& a, const NormalizedAlexander& b) {
    return a.poly_ == b.poly_;
  }

 private:
  LaurentPoly poly_;
  int sign_ = 1;
  std::int64_t shift_ = 0;
};

// f(t) f(t^-1), normalized. Requires f(1) = +-1.
NormalizedAlexander fox_milnor_compose(const LaurentPoly& f);

struct CassonValue {
  BigInt lambda;
  friend bool operator==(const CassonValue&, const CassonValue&) = default;
};

// lambda(M + (1/m) K) = lambda(M) + (m/2) Delta''(1).
CassonValue casson_surgery(const BigInt& lambda_m, const BigInt& m, const NormalizedAlexander& delta);

// <x, y | (xy)^n x (xy)^-n y^-1>
Presentation ribbon_presentation(int n);

// sum_{k=0}^{2n} (-t)^k
LaurentPoly closed_form_disk_polynomial(int n);
// coefficients (-1)^i (2n+1-|i|) for |i| <= 2n
LaurentPoly closed_form_knot_polynomial(int n);

struct FamilyInvariants {
  int n = 0;
  LaurentPoly f;
  NormalizedAlexander delta;
  BigInt delta_second_derivative;
  CassonValue lambda;
};

// The pipeline below without the closed-form checks.
FamilyInvariants compute_family_invariants(int n);

// Empty when every stage agrees with its closed form; otherwise a description
// of the first disagreement.
std::string closed_form_mismatch(const FamilyInvariants& inv);

/// Full pipeline for K_n: ribbon group -> f -> Delta -> Delta''(1) -> lambda
/// of 1-surgery on S^3. Each stage is compared with its closed form and any
/// mismatch throws VerificationError.
FamilyInvariants family_invariants(int n);

}  // namespace mazur
