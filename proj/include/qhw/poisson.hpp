#pragma once

#include "qhw/bialgebra.hpp"
#include "qhw/param_poly.hpp"
#include "qhw/quantization.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace qhw {

/// Variables of the coordinate algebra: three copies of (a-, a+, m) for
/// composing group elements, then the chart coordinates x1, x2, x3.
enum class Var : std::uint8_t {
  am, ap, m,
  am1, ap1, m1,
  am2, ap2, m2,
  x1, x2, x3
};
inline constexpr int kVarCount = 12;
std::string_view var_name(Var v);

/// Coordinate variable a-, a+ or m (index 0, 1, 2) of the given copy.
Var coord(int copy, int index);

/// Commutative polynomial in the coordinates with parameter-polynomial
/// coefficients. No truncation in the coordinates.
class CoordPoly {
 public:
  using Exponents = std::array<std::uint8_t, kVarCount>;

  explicit CoordPoly(int order = kDefaultOrder) : order_(order) {}
  static CoordPoly constant(const ParamPoly& c);
  static CoordPoly constant(const Rational& c, int order = kDefaultOrder);
  static CoordPoly variable(Var v, int order = kDefaultOrder);

  int order() const { return order_; }
  const std::map<Exponents, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> lowest_degree() const;
  /// Part of total coordinate degree d.
  CoordPoly homogeneous_part(int d) const;
  bool uses(Var v) const;

  void add_term(const Exponents& e, const ParamPoly& c);

  CoordPoly operator-() const;
  CoordPoly& operator+=(const CoordPoly& rhs);
  CoordPoly& operator-=(const CoordPoly& rhs);
  CoordPoly& operator*=(const ParamPoly& c);

  friend CoordPoly operator+(CoordPoly a, const CoordPoly& b) { return a += b; }
  friend CoordPoly operator-(CoordPoly a, const CoordPoly& b) { return a -= b; }
  friend CoordPoly operator*(const ParamPoly& c, CoordPoly a) { return a *= c; }
  friend CoordPoly operator*(const Rational& c, CoordPoly a) {
    return a *= ParamPoly::constant(c, a.order());
  }
  friend CoordPoly operator*(const CoordPoly& a, const CoordPoly& b);
  friend bool operator==(const CoordPoly&, const CoordPoly&) = default;

  CoordPoly derivative(Var v) const;
  /// Simultaneous substitution of variables by polynomials.
  CoordPoly substitute(const std::map<Var, CoordPoly>& images) const;

  /// e.g. "a1*a- + b1*a+" or "m - (1/2)*a1*a-^2".
  std::string to_string() const;

 private:
  int order_;
  std::map<Exponents, ParamPoly> terms_;
};

/// Element of the Heisenberg group in the coordinates (m, a-, a+). Works for
/// rational points and for symbolic coordinates alike.
template <typename Scalar>
struct GroupCoords {
  Scalar m;
  Scalar a_minus;
  Scalar a_plus;
  friend bool operator==(const GroupCoords&, const GroupCoords&) = default;
};

/// Coordinates of D(g2) D(g1): m'' = m + m' - a- a'+, a''_pm = a_pm + a'_pm.
template <typename Scalar>
GroupCoords<Scalar> group_compose(const GroupCoords<Scalar>& g1, const GroupCoords<Scalar>& g2) {
  return {g1.m + g2.m - g1.a_minus * g2.a_plus, g1.a_minus + g2.a_minus, g1.a_plus + g2.a_plus};
}

/// [[1, a-, m + a- a+], [0, 1, a+], [0, 0, 1]].
Matrix3 group_matrix(const GroupCoords<Rational>& g);
/// Inverse of group_matrix; throws UsageError for a matrix outside the group.
GroupCoords<Rational> group_coords(const Matrix3& d);

/// Symbolic coordinates of the given copy.
GroupCoords<CoordPoly> symbolic_coords(int copy, int order = kDefaultOrder);

/// Brackets of the coordinate generators of copy 0:
/// {a-,a+}, {a-,m}, {a+,m}. Different copies Poisson-commute.
struct PoissonStructure {
  std::array<CoordPoly, 3> brackets;

  /// {a-,a+} = a1 a- + b1 a+, {a-,m} = a2 a- + b2 a+ + b1 m - (a1/2) a-^2,
  /// {a+,m} = a3 a- + b3 a+ - a1 m + (b1/2) a+^2.
  static PoissonStructure from_coefficients(const std::array<ParamPoly, 6>& ab);
  /// Reads a1..b3 off a cocommutator.
  static PoissonStructure from_cocommutator(const Cocommutator& delta);
  /// Family parameters as in the quantization module.
  static PoissonStructure for_family(BialgebraType type, const FamilyParams& params,
                                     int order = kDefaultOrder);

  int order() const { return brackets[0].order(); }
};

/// Bilinear Leibniz extension of the generator brackets to all coordinate
/// copies. Throws UsageError if f or g involves a chart variable.
CoordPoly pl_bracket(const CoordPoly& f, const CoordPoly& g, const PoissonStructure& ps);

/// {a-,{a+,m}} + {a+,{m,a-}} + {m,{a-,a+}}.
ResidualReport jacobi_check(const PoissonStructure& ps);

/// Delta{u,v} - {Delta u, Delta v} for the coordinate pairs, with Delta the
/// pullback along the group law into copies 0 and 1.
ResidualReport poisson_homomorphism_check(const PoissonStructure& ps);

/// Linear part of each generator bracket against the dual bracket of delta.
ResidualReport linear_part_check(const PoissonStructure& ps, const Cocommutator& delta);

/// Rewrites a copy-0 polynomial in the chart x1 = a-, x2 = a+, x3 = m + a- a+.
CoordPoly chart_change(const CoordPoly& p);
/// Back from (x1, x2, x3) to (a-, a+, m).
CoordPoly chart_inverse(const CoordPoly& p);

}  // namespace qhw
