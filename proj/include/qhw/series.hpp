#pragma once

#include "qhw/free_element.hpp"

#include <array>
#include <string>

namespace qhw {

/// sum_{n=0..K} x^n / n! in the free algebra. Every term of x must carry
/// parameter degree >= 1 (NonNilpotentError otherwise).
FreeElement exp_element(const FreeElement& x);

/// 2x2 matrix over the free algebra, row-major.
struct Matrix2 {
  std::array<FreeElement, 4> entries;

  explicit Matrix2(int order = kDefaultOrder)
      : entries{FreeElement(order), FreeElement(order), FreeElement(order), FreeElement(order)} {}
  Matrix2(FreeElement e11, FreeElement e12, FreeElement e21, FreeElement e22)
      : entries{std::move(e11), std::move(e12), std::move(e21), std::move(e22)} {}

  static Matrix2 identity(int order = kDefaultOrder);

  FreeElement& operator()(int i, int j) { return entries[2 * i + j]; }
  const FreeElement& operator()(int i, int j) const { return entries[2 * i + j]; }
  int order() const { return entries[0].order(); }

  Matrix2 operator-() const;
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 operator+(const Matrix2& a, const Matrix2& b);
/// Matrix product with free-algebra entry products.
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(const Rational& c, const Matrix2& a);

/// Matrix exponential by the terminating series. The entries must be
/// polynomials in one common generator (so they commute pairwise) and carry
/// parameter degree >= 1.
Matrix2 exp_matrix2(const Matrix2& m);

/// e11*e22 - e12*e21 (entries commute under the exp_matrix2 precondition).
FreeElement determinant(const Matrix2& m);

}  // namespace qhw
