#include "mazur/algebra/int_matrix.hpp"

#include <optional>
#include <utility>

#include "mazur/algebra/errors.hpp"

namespace mazur {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw UsageError("ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix dimension mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

// Fraction-free Bareiss elimination.
BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string format_matrix(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += m(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] += k * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}

BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix d = input;
  IntMatrix u = IntMatrix::identity(input.rows());
  IntMatrix v = IntMatrix::identity(input.cols());
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // Pivot on the smallest nonzero magnitude; ties go to the first in row-major order.
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) != 0 && (!pivot || abs(d(i, j)) < abs(d(pivot->first, pivot->second)))) {
            pivot = {i, j};
          }
        }
      }
      if (!pivot) return {std::move(d), std::move(u), std::move(v)};
      swap_rows(d, t, pivot->first);
      swap_rows(u, t, pivot->first);
      swap_cols(d, t, pivot->second);
      swap_cols(v, t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const BigInt q = d(i, t) / d(t, t);
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const BigInt q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d(t,t) | every remaining entry by folding an offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(u, t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

std::vector<BigInt> SmithForm::invariant_factors() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < diagonal.rows() && i < diagonal.cols(); ++i) {
    if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
  }
  return out;
}

AbelianGroup cokernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  AbelianGroup g;
  const auto factors = snf.invariant_factors();
  g.free_rank = m.rows() - factors.size();
  for (const auto& f : factors) {
    if (f != 1) g.torsion.push_back(f);
  }
  return g;
}

std::string format_group(const AbelianGroup& g) {
  std::string out;
  if (g.free_rank > 0) out = g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
  for (const auto& t : g.torsion) {
    if (!out.empty()) out += "+";
    out += "Z/" + t.str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace mazur
