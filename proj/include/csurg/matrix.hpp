#pragma once

#include <cstddef>
#include <vector>

#include "csurg/rational.hpp"

namespace csurg {

/// Dense row-major square-or-rectangular matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Fraction-free Bareiss elimination. The 0x0 determinant is 1.
Integer determinant(const IntMatrix& m);

/// Invariant factors of a square integer matrix.
struct SmithForm {
  std::vector<Integer> diagonal;  ///< nonnegative, d_1 | d_2 | ... (zeros last)
  std::size_t free_rank = 0;      ///< number of zero invariant factors
  /// Invariant factors > 1, the torsion part of the cokernel.
  std::vector<Integer> elementary_divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Signature of a symmetric matrix by exact congruence diagonalization.
/// Zero pivots are handled by adding a partner row/column first.
long signature(const IntMatrix& m);

/// Solves m x = b exactly; throws NumericError if m is singular.
std::vector<Rational> solve(const IntMatrix& m, const std::vector<Integer>& b);

/// Exact inverse; throws NumericError if m is singular.
RationalMatrix inverse(const IntMatrix& m);

/// x^T a x over the rationals.
Rational quadratic_form(const RationalMatrix& a, const std::vector<Integer>& x);

}  // namespace csurg
