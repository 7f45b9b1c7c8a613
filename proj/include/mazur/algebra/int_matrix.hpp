#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mazur/algebra/bigint.hpp"

namespace mazur {

/// Dense integer matrix with fixed dimensions (either may be zero).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  // Square matrices only (0x0 has determinant 1).
  BigInt determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::string format_matrix(const IntMatrix& m);

/// U * input * V == diagonal, with U and V unimodular and the diagonal
/// entries nonnegative and forming a divisibility chain d1 | d2 | ...
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;   // U
  IntMatrix right;  // V

  std::size_t rank() const;
  // Nonzero diagonal entries in order.
  std::vector<BigInt> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group Z^rank + sum Z/torsion_i.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // each >= 2, divisibility ordered

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Z^rows / column span of m.
AbelianGroup cokernel(const IntMatrix& m);

// "0", "Z", "Z^2+Z/3", ...
std::string format_group(const AbelianGroup& g);

}  // namespace mazur
