#pragma once

#include "qhw/bialgebra.hpp"
#include "qhw/free_element.hpp"
#include "qhw/param_poly.hpp"
#include "qhw/rewrite.hpp"
#include "qhw/series.hpp"
#include "qhw/tensor.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qhw {

/// Family parameters keyed by name: (a1, a3) for Type I+, (b1, b2) for
/// Type I-, (a2, a3, b2, b3) for Type II. Missing entries are zero. Values
/// must have no constant term so that every exponential terminates.
using FamilyParams = std::map<Param, ParamPoly>;

/// Parameter names used by a family, in display order.
std::vector<Param> family_parameters(BialgebraType type);

/// Every family parameter as its own symbol.
FamilyParams symbolic_params(BialgebraType type, int order = kDefaultOrder);

/// Normalized cocommutator of a family written in terms of its parameters.
Cocommutator family_cocommutator(BialgebraType type, const FamilyParams& params,
                                 int order = kDefaultOrder);

/// delta(v) = N .^ v on the non-primitive generators v, with entries of N
/// linear in the primitive generator.
struct MatrixDelta {
  Matrix2 n;
  std::array<Gen, 2> vector;
  Gen primitive;
};

MatrixDelta matrix_delta(BialgebraType type, const FamilyParams& params, int order = kDefaultOrder);
/// Reads the parameters off a normalized classification (constant entries).
MatrixDelta matrix_delta(const BialgebraClass& cls, int order = kDefaultOrder);

/// Primitive generator gets 1(x)X + X(x)1; Delta(v_i) = 1(x)v_i + sum_j
/// v_j (x) exp(-N)_ij. Indexed by Gen.
std::array<TensorElement, 3> build_coproduct(BialgebraType type, const FamilyParams& params,
                                             int order = kDefaultOrder);

/// Deformed commutation relations of the family.
RewriteSystem family_rewrite(BialgebraType type, const FamilyParams& params,
                             int order = kDefaultOrder);

/// The letter map A+ -> A-, A- -> A+, M -> -M, as images indexed by Gen.
std::array<FreeElement, 3> swap_letters(int order = kDefaultOrder);

struct HopfPresentation {
  BialgebraType type = BialgebraType::Trivial;
  FamilyParams params;
  /// Constant values substituted into every coefficient for display only.
  FamilyParams display;
  int order = kDefaultOrder;
  Gen primitive = Gen::M;
  RewriteSystem rewrite = RewriteSystem::undeformed();
  std::array<TensorElement, 3> coproduct{TensorElement(2), TensorElement(2), TensorElement(2)};
  std::array<ParamPoly, 3> counit;
  std::array<FreeElement, 3> antipode;
};

/// Assembles the presentation of a family; the antipode comes from
/// solve_antipode. Nothing is verified here.
HopfPresentation build_family(BialgebraType type, const FamilyParams& params,
                              int order = kDefaultOrder);

/// Presentation for a classified bialgebra. Nonzero normalized parameters are
/// carried as symbols (zero ones stay exactly zero) and their values are
/// kept in `display`.
HopfPresentation quantize(const BialgebraClass& cls, int order = kDefaultOrder);

/// Transports a Type I+ presentation along the swap automorphism, with
/// a1 -> -b1, a3 -> -b2, to a Type I- presentation.
HopfPresentation transport_swap(const HopfPresentation& plus);

struct ResidualEntry {
  std::string label;
  bool zero = true;
  std::optional<int> lowest_degree;
  std::string text;
};

struct ResidualReport {
  std::string axiom;
  std::vector<ResidualEntry> entries;
  bool passed() const;
};

ResidualReport verify_homomorphism(const HopfPresentation& hp);
ResidualReport verify_coassoc(const HopfPresentation& hp);
ResidualReport verify_counit(const HopfPresentation& hp);
/// Both antipode axioms per generator, plus compatibility of the antipode
/// (as an anti-homomorphism) and the counit with the relations.
ResidualReport verify_antipode(const HopfPresentation& hp);
/// All four, in that order.
std::vector<ResidualReport> verify_hopf(const HopfPresentation& hp);

/// Degree-1 part of Delta - flip(Delta) against delta, per generator.
ResidualReport first_order_check(const HopfPresentation& hp, const Cocommutator& delta);

/// Solves m(gamma(x)id)Delta(X) = eps(X) order by order in parameter degree.
/// Throws InconsistencyError when no solution exists at order K.
std::array<FreeElement, 3> solve_antipode(const std::array<TensorElement, 3>& coproduct,
                                          const RewriteSystem& rs);

/// gamma(A+) = -A+, gamma(M) = -M exp(-a1 A+),
/// gamma(A-) = -A- exp(-a1 A+) - a3 M A+ exp(-a1 A+), normal-ordered.
std::array<FreeElement, 3> type_i_plus_antipode(const FamilyParams& params, const RewriteSystem& rs);

/// E11 E22 - E12 E21 - exp((a2+b3) M) for E = exp(-N) of Type II.
FreeElement type_ii_determinant_residual(const FamilyParams& params, int order = kDefaultOrder);

/// C = M exp(-a1 A+ / 2) for Type I+.
FreeElement central_element(const FamilyParams& params, int order = kDefaultOrder);

/// [C, X] for each generator, and the relations rewritten with C:
/// [A-,A+] = C exp(a1 A+ / 2), [A+,C] = [A-,C] = 0.
ResidualReport central_element_check(const HopfPresentation& hp);

/// A+ = x, A- = lambda e^{a1 x/2} d/dx, M = lambda e^{a1 x/2} acting on x^n,
/// n <= max_degree. Checks the three Type I+ relations and that C acts as
/// lambda. lambda counts as one parameter degree.
ResidualReport check_realization(const FamilyParams& params, int max_degree,
                                 int order = kDefaultOrder);

/// Text forms of a presentation in the canonical rendering, with display
/// values substituted.
struct RenderedPresentation {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  int order = 0;
  std::string primitive;
  /// Keyed "[A-,A+]", "[A-,M]", "[A+,M]".
  std::vector<std::pair<std::string, std::string>> relations;
  std::vector<std::pair<std::string, std::string>> relations_closed;
  /// Keyed by generator name, in the order A-, A+, M.
  std::vector<std::pair<std::string, std::string>> coproduct;
  std::vector<std::pair<std::string, std::string>> coproduct_closed;
  std::vector<std::pair<std::string, std::string>> counit;
  std::vector<std::pair<std::string, std::string>> antipode;
  /// Definitions of the E_ij(M) names used in the closed coproduct, if any.
  std::string legend;
};

RenderedPresentation render(const HopfPresentation& hp);

}  // namespace qhw
