#include "mazur/knot/alexander.hpp"

#include <numeric>
#include <utility>

#include "mazur/algebra/errors.hpp"
#include "mazur/algebra/group_ring.hpp"

namespace mazur {

namespace {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

// Fraction-free Bareiss elimination; every division is exact in Z[t, t^-1].
LaurentPoly determinant(LaurentMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly sign(1);
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return LaurentPoly();
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LaurentPoly canonical_up_to_units(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-p.min_exponent());
  const BigInt at_one = q.eval_at_one();
  if (at_one < 0 || (at_one == 0 && q.terms().rbegin()->second < 0)) q = -q;
  return q;
}

}  // namespace

LaurentPoly alexander_from_presentation(const Presentation& p, std::span<const std::int64_t> weights) {
  const int g = p.generators();
  if (p.deficiency() != 1) {
    throw UsageError("Alexander polynomial needs a deficiency-one presentation (got deficiency " +
                     std::to_string(p.deficiency()) + ")");
  }
  if (weights.size() != static_cast<std::size_t>(g)) {
    throw UsageError("need exactly one weight per generator");
  }
  std::int64_t gcd = 0;
  for (auto w : weights) gcd = std::gcd(gcd, w);
  if (gcd != 1) throw UsageError("generator weights do not map onto Z");
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto sums = p.relators()[i].exponent_sums();
    std::int64_t total = 0;
    for (std::size_t j = 0; j < sums.size(); ++j) total += sums[j] * weights[j];
    if (total != 0) {
      throw UsageError("relator " + std::to_string(i + 1) + " has nonzero weighted exponent sum");
    }
  }

  LaurentMatrix jacobian;
  for (const auto& r : p.relators()) {
    std::vector<LaurentPoly> row;
    for (int j = 0; j < g; ++j) row.push_back(abelianize(fox_derivative(r, Generator{j}), weights));
    jacobian.push_back(std::move(row));
  }

  // Deleting column j leaves Delta * (t^{w_j} - 1) / (t - 1), up to sign.
  std::vector<LaurentPoly> candidates;
  const LaurentPoly t_minus_one = LaurentPoly::t_power(1) - LaurentPoly(1);
  for (int j = 0; j < g; ++j) {
    const auto w = weights[static_cast<std::size_t>(j)];
    if (w == 0) continue;
    LaurentMatrix minor;
    for (const auto& row : jacobian) {
      std::vector<LaurentPoly> r;
      for (int c = 0; c < g; ++c) {
        if (c != j) r.push_back(row[static_cast<std::size_t>(c)]);
      }
      minor.push_back(std::move(r));
    }
    const LaurentPoly scale = LaurentPoly::t_power(w) - LaurentPoly(1);
    candidates.push_back(canonical_up_to_units((determinant(std::move(minor)) * t_minus_one).divide_exact(scale)));
  }
  for (const auto& c : candidates) {
    if (c != candidates.front()) {
      throw VerificationError("Alexander polynomial depends on the deleted column: " +
                              format_laurent(candidates.front()) + " vs " + format_laurent(c));
    }
  }
  return candidates.front();
}

NormalizedAlexander NormalizedAlexander::normalize(const LaurentPoly& p) {
  const BigInt at_one = p.eval_at_one();
  if (at_one != 1 && at_one != -1) {
    throw UsageError("Alexander polynomial must evaluate to +-1 at t = 1, got " + at_one.str());
  }
  const std::int64_t span_sum = p.min_exponent() + p.max_exponent();
  if (span_sum % 2 != 0) throw UsageError("polynomial has odd span and cannot be made symmetric");
  NormalizedAlexander n;
  n.sign_ = at_one == 1 ? 1 : -1;
  n.shift_ = -span_sum / 2;
  n.poly_ = (n.sign_ == 1 ? p : -p).shifted(n.shift_);
  if (!n.poly_.is_symmetric()) throw UsageError("polynomial is not symmetric up to units");
  return n;
}

NormalizedAlexander fox_milnor_compose(const LaurentPoly& f) {
  const BigInt at_one = f.eval_at_one();
  if (at_one != 1 && at_one != -1) {
    throw UsageError("f(1) must be +-1 for a slice-disk factor, got " + at_one.str());
  }
  return NormalizedAlexander::normalize(f * f.reflected());
}

CassonValue casson_surgery(const BigInt& lambda_m, const BigInt& m, const NormalizedAlexander& delta) {
  const BigInt d2 = delta.second_derivative_at_one();
  if (d2 % 2 != 0) {
    throw VerificationError("second derivative at 1 is odd for a normalized Alexander polynomial");
  }
  return {lambda_m + m * (d2 / 2)};
}

Presentation ribbon_presentation(int n) {
  if (n < 0) throw UsageError("family index must be nonnegative");
  const Word x = Word::generator(2, 0);
  const Word y = Word::generator(2, 1);
  const Word xy_n = (x * y).pow(n);
  return Presentation(2, {xy_n * x * xy_n.inverse() * y.inverse()});
}

LaurentPoly closed_form_disk_polynomial(int n) {
  LaurentPoly f;
  for (int k = 0; k <= 2 * n; ++k) f += LaurentPoly::monomial(k % 2 == 0 ? 1 : -1, k);
  return f;
}

LaurentPoly closed_form_knot_polynomial(int n) {
  LaurentPoly d;
  for (int i = -2 * n; i <= 2 * n; ++i) {
    const int mag = 2 * n + 1 - (i < 0 ? -i : i);
    d += LaurentPoly::monomial((i % 2 == 0 ? 1 : -1) * mag, i);
  }
  return d;
}

FamilyInvariants compute_family_invariants(int n) {
  if (n < 1) throw UsageError("family index must be at least 1");
  const std::int64_t weights[] = {1, 1};
  FamilyInvariants out;
  out.n = n;
  out.f = alexander_from_presentation(ribbon_presentation(n), weights);
  out.delta = fox_milnor_compose(out.f);
  out.delta_second_derivative = out.delta.second_derivative_at_one();
  out.lambda = casson_surgery(0, 1, out.delta);
  return out;
}

std::string closed_form_mismatch(const FamilyInvariants& inv) {
  const std::string at = "n=" + std::to_string(inv.n) + ": ";
  const BigInt n(inv.n);
  if (inv.f != closed_form_disk_polynomial(inv.n)) {
    return at + "f(t) = " + format_laurent(inv.f) + " differs from the closed form";
  }
  if (inv.delta.poly() != closed_form_knot_polynomial(inv.n)) {
    return at + "Delta(t) = " + format_laurent(inv.delta.poly()) + " differs from the closed form";
  }
  if (inv.delta_second_derivative != 2 * n * (n + 1)) {
    return at + "Delta''(1) = " + inv.delta_second_derivative.str() + " differs from 2n(n+1)";
  }
  if (inv.lambda.lambda != n * (n + 1)) {
    return at + "lambda = " + inv.lambda.lambda.str() + " differs from n(n+1)";
  }
  return {};
}

FamilyInvariants family_invariants(int n) {
  FamilyInvariants out = compute_family_invariants(n);
  if (const auto why = closed_form_mismatch(out); !why.empty()) throw VerificationError(why);
  return out;
}

}  // namespace mazur
