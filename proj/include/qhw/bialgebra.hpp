#pragma once

#include "qhw/free_element.hpp"
#include "qhw/param_poly.hpp"
#include "qhw/rewrite.hpp"
#include "qhw/tensor.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qhw {

using Matrix3 = Eigen::Matrix<Rational, 3, 3>;

/// Lie-algebra basis order (A-, A+, M). Structure constants, cocommutator
/// rows and basis-change matrices are indexed this way.
inline constexpr std::array<Gen, 3> kBasis = {Gen::AMinus, Gen::APlus, Gen::M};
int basis_index(Gen g);

/// Wedge basis of g^g: (A-^A+, A-^M, A+^M), with X^Y := X(x)Y - Y(x)X.
inline constexpr std::array<std::array<int, 2>, 3> kWedgePairs = {{{0, 1}, {0, 2}, {1, 2}}};

/// Three-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k constants[k](i, j) e_k.
struct LieStructure {
  std::array<Matrix3, 3> constants;

  /// [A-, A+] = M, everything else zero.
  static LieStructure heisenberg();

  /// Coordinates of [e_i, e_j].
  std::array<Rational, 3> bracket(int i, int j) const;
  bool is_antisymmetric() const;
  bool satisfies_jacobi() const;

  /// Rewrite system of the universal enveloping algebra.
  RewriteSystem enveloping(int order = kDefaultOrder) const;
};

/// delta(A-) = a1 A-^A+ + a2 A-^M + a3 A+^M, and likewise b_i for A+, c_i
/// for M. Coefficients are parameter polynomials: constants for concrete
/// classification, symbols when re-deriving constraints.
struct Cocommutator {
  /// coef[row][col]: row over (A-, A+, M), column over kWedgePairs.
  std::array<std::array<ParamPoly, 3>, 3> coef;

  explicit Cocommutator(int order = kDefaultOrder);
  /// All nine coefficients as the symbols a1..c3.
  static Cocommutator symbolic(int order = kDefaultOrder);
  /// (a1,a2,a3,b1,b2,b3,c1,c2,c3).
  static Cocommutator from_values(const std::array<Rational, 9>& values, int order = kDefaultOrder);
  /// Six free coefficients with c1 = 0, c2 = b1, c3 = -a1.
  static Cocommutator with_forced_c(const std::array<ParamPoly, 6>& ab);

  int order() const { return coef[0][0].order(); }
  ParamPoly& at(int row, int col) { return coef[row][col]; }
  const ParamPoly& at(int row, int col) const { return coef[row][col]; }
  const ParamPoly& a(int i) const { return coef[0][i - 1]; }
  const ParamPoly& b(int i) const { return coef[1][i - 1]; }
  const ParamPoly& c(int i) const { return coef[2][i - 1]; }

  bool is_zero() const;
  bool is_constant() const;
  /// Requires constant coefficients.
  std::array<Rational, 9> values() const;

  /// delta(x) as a rank-2 tensor of single-letter words.
  TensorElement image(Gen x) const;
  /// Reads a cocommutator back from skew tensor images; throws UsageError if
  /// an image is not skew or leaves g(x)g.
  static Cocommutator from_images(const std::array<TensorElement, 3>& images);

  friend bool operator==(const Cocommutator&, const Cocommutator&) = default;
  std::string to_string() const;
};

/// r = xi A+^A- + beta_plus A+^M + beta_minus A-^M.
struct RMatrix {
  ParamPoly xi;
  ParamPoly beta_plus;
  ParamPoly beta_minus;

  explicit RMatrix(int order = kDefaultOrder) : xi(order), beta_plus(order), beta_minus(order) {}
  RMatrix(ParamPoly x, ParamPoly bp, ParamPoly bm)
      : xi(std::move(x)), beta_plus(std::move(bp)), beta_minus(std::move(bm)) {}
  static RMatrix symbolic(int order = kDefaultOrder);

  TensorElement tensor() const;
  friend bool operator==(const RMatrix&, const RMatrix&) = default;
};

struct CocycleResidual {
  Gen x;
  Gen y;
  TensorElement residual;
};

/// delta([X,Y]) - [delta(X), 1(x)Y + Y(x)1] - [1(x)X + X(x)1, delta(Y)] for
/// the three basis pairs, evaluated in U(g)(x)U(g).
std::vector<CocycleResidual> cocycle_residuals(const Cocommutator& delta,
                                               const LieStructure& g = LieStructure::heisenberg());

/// Jacobiator of the dual bracket on (a-, a+, m) read off delta. With the
/// cocycle constraints imposed the first two entries are
/// a1(b3-a2) - 2 b1 a3 and b1(a2-b3) - 2 a1 b2 and the third vanishes.
std::array<ParamPoly, 3> cojacobi_residuals(const Cocommutator& delta);

/// Dual structure constants: dual[i][j][k] is the coefficient of e^k in
/// [e^i, e^j]_*.
using DualBracket = std::array<std::array<std::array<ParamPoly, 3>, 3>, 3>;
DualBracket dual_bracket(const Cocommutator& delta);

/// Distinct nonzero coefficients of the cocycle residuals, each scaled so its
/// leading graded-lex coefficient is 1.
std::vector<ParamPoly> cocycle_constraints(const Cocommutator& delta,
                                           const LieStructure& g = LieStructure::heisenberg());

/// Scales p so that its leading graded-lex term has coefficient 1.
ParamPoly monic(const ParamPoly& p);

/// Transports delta to the basis e'_i = sum_j basis_change(i, j) e_j.
/// Throws AutomorphismError naming the first bracket that is not preserved.
Cocommutator apply_automorphism(const Cocommutator& delta, const Matrix3& basis_change,
                                const LieStructure& g = LieStructure::heisenberg());

/// Rows A-' = A+, A+' = A-, M' = -M.
Matrix3 swap_automorphism();

/// Schouten bracket [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23].
TensorElement schouten(const RMatrix& r, const LieStructure& g = LieStructure::heisenberg());

/// M^A+^A- as the alternating sum of its six orderings.
TensorElement triple_wedge(int order = kDefaultOrder);

/// Coefficient c with omega = c * M^A+^A-, or nullopt if omega is not alternating.
std::optional<ParamPoly> alternating_coefficient(const TensorElement& omega);

/// Invariance of omega under the diagonal adjoint action. Throws UsageError
/// when omega is not an alternating rank-3 tensor.
bool mcybe_check(const TensorElement& omega, const LieStructure& g = LieStructure::heisenberg());

/// delta(X) = [1(x)X + X(x)1, r].
Cocommutator coboundary_delta(const RMatrix& r, const LieStructure& g = LieStructure::heisenberg());

struct RMatrixSolution {
  /// Canonical representative (gauge directions set to zero).
  RMatrix r;
  /// Directions that leave delta unchanged.
  std::vector<RMatrix> gauge;
};

/// Exact linear solve of coboundary_delta(r) = delta over rational r.
std::optional<RMatrixSolution> find_rmatrix(const Cocommutator& delta);

enum class BialgebraType { Trivial, TypeIPlus, TypeIMinus, TypeII, Invalid };
std::string_view type_name(BialgebraType t);

/// Literal solution-type predicates on a cocycle-valid tuple.
bool is_type_i_plus(const Cocommutator& delta);
bool is_type_i_minus(const Cocommutator& delta);
bool is_type_ii(const Cocommutator& delta);

struct BialgebraClass {
  BialgebraType type = BialgebraType::Invalid;
  Cocommutator original;
  Cocommutator normalized;
  /// Rows are the new basis vectors in (A-, A+, M) coordinates.
  Matrix3 automorphism = Matrix3::Identity();
  bool coboundary = false;
  std::optional<RMatrixSolution> rmatrix;
  /// Only the nonzero cocycle residuals.
  std::vector<CocycleResidual> cocycle;
  std::array<ParamPoly, 3> cojacobi;
};

/// Requires constant coefficients.
BialgebraClass classify(const Cocommutator& delta);

/// Human-readable form of the basis change, e.g. "A+' = A+ - A-".
std::string describe_automorphism(const Matrix3& basis_change);

}  // namespace qhw
