#include "qhw/series.hpp"

#include "qhw/errors.hpp"

#include <optional>

namespace qhw {

namespace {

void require_nilpotent(const FreeElement& x, const char* what) {
  for (const auto& [w, c] : x.terms()) {
    if (c.lowest_degree().value_or(1) < 1) {
      throw NonNilpotentError(std::string(what) + ": term " + render_word(w) +
                              " has a parameter-free coefficient");
    }
  }
}

}  // namespace

FreeElement exp_element(const FreeElement& x) {
  require_nilpotent(x, "exp");
  const int k = x.order();
  FreeElement sum = FreeElement::one(k);
  FreeElement power = FreeElement::one(k);
  for (int n = 1; n <= k; ++n) {
    power = (power * x) * Rational(1, n);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

Matrix2 Matrix2::identity(int order) {
  return Matrix2(FreeElement::one(order), FreeElement(order), FreeElement(order),
                 FreeElement::one(order));
}

Matrix2 Matrix2::operator-() const {
  return Matrix2(-entries[0], -entries[1], -entries[2], -entries[3]);
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  return Matrix2(a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1));
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 out(a.order());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  }
  return out;
}

Matrix2 operator*(const Rational& c, const Matrix2& a) {
  return Matrix2(c * a(0, 0), c * a(0, 1), c * a(1, 0), c * a(1, 1));
}

Matrix2 exp_matrix2(const Matrix2& m) {
  std::optional<Gen> common;
  for (const auto& e : m.entries) {
    require_nilpotent(e, "matrix exp");
    for (const auto& [w, c] : e.terms()) {
      for (Gen g : w) {
        if (common && *common != g) {
          throw UnsupportedMatrixError(
              "matrix entries involve both " + std::string(gen_name(*common)) + " and " +
              std::string(gen_name(g)) + "; they need not commute");
        }
        common = g;
      }
    }
  }
  const int k = m.order();
  Matrix2 sum = Matrix2::identity(k);
  Matrix2 power = Matrix2::identity(k);
  for (int n = 1; n <= k; ++n) {
    power = Rational(1, n) * (power * m);
    sum = sum + power;
  }
  return sum;
}

FreeElement determinant(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace qhw
