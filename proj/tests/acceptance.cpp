// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or overruns its time limit.

#include "qhw/bialgebra.hpp"
#include "qhw/json_io.hpp"
#include "qhw/poisson.hpp"
#include "qhw/quantization.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace qhw;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

bool all_pass(const std::vector<ResidualReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

bool same_up_to_sign(const ParamPoly& a, const ParamPoly& b) { return a == b || a == -b; }

/// Every polynomial in `want` appears (up to sign) in `got`, and nothing else.
bool same_set(const std::vector<ParamPoly>& got, const std::vector<ParamPoly>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    bool found = false;
    for (const auto& g : got) found = found || same_up_to_sign(g, w);
    if (!found) return false;
  }
  return true;
}

constexpr std::array<BialgebraType, 3> kFamilies = {BialgebraType::TypeIPlus, BialgebraType::TypeIMinus,
                                                    BialgebraType::TypeII};

HopfPresentation symbolic_family(BialgebraType type, int k) {
  return build_family(type, symbolic_params(type, k), k);
}

Outcome constraint_derivation() {
  Outcome o;
  const int k = kDefaultOrder;
  auto s = [&](Param p) { return ParamPoly::symbol(p, k); };
  const Cocommutator delta = Cocommutator::symbolic(k);
  o.require(same_set(cocycle_constraints(delta), {s(Param::c1), s(Param::c2) - s(Param::b1), s(Param::c3) + s(Param::a1)}),
            "cocycle constraints differ from {c1, c2 - b1, c3 + a1}");

  const std::map<Param, ParamPoly> forced{{Param::c1, ParamPoly(k)}, {Param::c2, s(Param::b1)}, {Param::c3, -s(Param::a1)}};
  std::vector<ParamPoly> cojacobi;
  for (const auto& r : cojacobi_residuals(delta)) {
    const ParamPoly reduced = substitute(r, forced);
    if (!reduced.is_zero()) cojacobi.push_back(reduced);
  }
  const ParamPoly first = s(Param::a1) * (s(Param::b3) - s(Param::a2)) - Rational(2) * s(Param::b1) * s(Param::a3);
  const ParamPoly second = s(Param::b1) * (s(Param::a2) - s(Param::b3)) - Rational(2) * s(Param::a1) * s(Param::b2);
  o.require(same_set(cojacobi, {first, second}), "co-Jacobi polynomials differ");
  return o;
}

Outcome classification_exhaustiveness() {
  Outcome o;
  int valid = 0;
  int coboundaries = 0;
  std::array<Rational, 6> ab;
  for (int code = 0; code < 15625; ++code) {
    int rest = code;
    for (auto& x : ab) {
      x = rest % 5 - 2;
      rest /= 5;
    }
    std::array<ParamPoly, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = ParamPoly::constant(ab[i]);
    const Cocommutator delta = Cocommutator::with_forced_c(c);

    // classify runs both residual checks and keeps the nonzero cocycle ones.
    const BialgebraClass cls = classify(delta);
    const bool cocycle_ok = cls.cocycle.empty();
    bool cojacobi_ok = true;
    for (const auto& r : cls.cojacobi) cojacobi_ok = cojacobi_ok && r.is_zero();
    const auto& [a1, a2, a3, b1, b2, b3] = ab;
    const bool constraints = a1 * (b3 - a2) - 2 * a3 * b1 == 0 && b1 * (a2 - b3) - 2 * a1 * b2 == 0;
    o.require((cocycle_ok && cojacobi_ok) == constraints, "residual checks disagree with the constraints: " + delta.to_string());
    if (!(cocycle_ok && cojacobi_ok)) {
      o.require(cls.type == BialgebraType::Invalid, "failing tuple not INVALID: " + delta.to_string());
      continue;
    }
    ++valid;
    // TRIVIAL is the zero point, which the literal Type II conditions also admit.
    const bool trivial = delta.is_zero();
    const int hits = trivial + is_type_i_plus(delta) + is_type_i_minus(delta) + (is_type_ii(delta) && !trivial);
    o.require(hits == 1, "tuple matches " + std::to_string(hits) + " types: " + delta.to_string());
    BialgebraType expected = BialgebraType::Trivial;
    if (is_type_i_plus(delta)) expected = BialgebraType::TypeIPlus;
    if (is_type_i_minus(delta)) expected = BialgebraType::TypeIMinus;
    if (is_type_ii(delta) && !trivial) expected = BialgebraType::TypeII;
    o.require(cls.type == expected, "type mismatch: " + delta.to_string());

    const bool pattern = a1 == 0 && a3 == 0 && b1 == 0 && b2 == 0 && a2 == b3;
    o.require(cls.coboundary == pattern, "coboundary flag wrong: " + delta.to_string());
    coboundaries += cls.coboundary;
  }
  o.require(coboundaries == 5, "expected 5 coboundary tuples, got " + std::to_string(coboundaries));
  if (o.ok) o.note = std::to_string(valid) + " valid tuples, " + std::to_string(coboundaries) + " coboundary";
  return o;
}

Outcome coboundary_theorem() {
  Outcome o;
  const int k = kDefaultOrder;
  const RMatrix r = RMatrix::symbolic(k);
  const ParamPoly xi = ParamPoly::symbol(Param::xi, k);
  const TensorElement omega = schouten(r);
  o.require(omega == (-(xi * xi)) * triple_wedge(k), "schouten is not -xi^2 M^A+^A-");
  o.require(mcybe_check(omega), "mCYBE fails");
  Cocommutator expected(k);
  expected.at(0, 1) = -xi;  // a2
  expected.at(1, 2) = -xi;  // b3
  o.require(coboundary_delta(r) == expected, "coboundary_delta is not a2 = b3 = -xi");
  return o;
}

Outcome hopf_type_i_plus() {
  Outcome o;
  o.require(all_pass(verify_hopf(symbolic_family(BialgebraType::TypeIPlus, 4))), "a Hopf axiom fails at K=4");

  const int k = 6;
  const HopfPresentation hp = symbolic_family(BialgebraType::TypeIPlus, k);
  const ParamPoly a1 = ParamPoly::symbol(Param::a1, k);
  const ParamPoly a3 = ParamPoly::symbol(Param::a3, k);
  const FreeElement am = FreeElement::generator(Gen::AMinus, k);
  const FreeElement ap = FreeElement::generator(Gen::APlus, k);
  const FreeElement m = FreeElement::generator(Gen::M, k);
  const FreeElement e = exp_element(-a1 * ap);
  // gamma(A-) = -A- e^{-a1 A+} - a3 M A+ e^{-a1 A+}, normal-ordered.
  const FreeElement closed = normal_form(-(am * e) - a3 * (m * ap * e), hp.rewrite);
  o.require(hp.antipode[static_cast<int>(Gen::AMinus)] == closed, "gamma(A-) differs from the closed form");
  o.require(hp.antipode[static_cast<int>(Gen::APlus)] == -ap, "gamma(A+) != -A+");
  o.require(hp.antipode[static_cast<int>(Gen::M)] == normal_form(-(m * e), hp.rewrite), "gamma(M) differs");
  return o;
}

Outcome hopf_type_ii() {
  Outcome o;
  o.require(all_pass(verify_hopf(symbolic_family(BialgebraType::TypeII, 4))), "a Hopf axiom fails at K=4");
  const int k = 8;
  const FamilyParams params = symbolic_params(BialgebraType::TypeII, k);
  const MatrixDelta md = matrix_delta(BialgebraType::TypeII, params, k);
  const FreeElement s = (ParamPoly::symbol(Param::a2, k) + ParamPoly::symbol(Param::b3, k)) *
                        FreeElement::generator(Gen::M, k);
  o.require(determinant(exp_matrix2(-md.n)) == exp_element(s), "det E != exp((a2+b3) M) at K=8");
  o.require(type_ii_determinant_residual(params, k).is_zero(), "determinant residual nonzero");
  return o;
}

Outcome first_order_limit() {
  Outcome o;
  const int k = 4;
  for (BialgebraType type : kFamilies) {
    const std::string name(type_name(type));
    // Symbolic parameters.
    const HopfPresentation hp = symbolic_family(type, k);
    o.require(first_order_check(hp, family_cocommutator(type, hp.params, k)).passed(), name + " symbolic");
    // A concrete point run through the classifier.
    FamilyParams values;
    Rational v = 1;
    for (Param p : family_parameters(type)) {
      values.emplace(p, ParamPoly::constant(v, k));
      v += Rational(1, 2);
    }
    const BialgebraClass cls = classify(family_cocommutator(type, values, k));
    o.require(cls.type == type, name + " point misclassified");
    const HopfPresentation q = quantize(cls, k);
    o.require(first_order_check(q, family_cocommutator(type, q.params, k)).passed(), name + " classified point");
  }
  if (o.ok) o.note = "degree-1 part of Delta - sigma(Delta) equals delta, i.e. sigma(Delta) - Delta gives -delta";
  return o;
}

Outcome centrality_and_realization() {
  Outcome o;
  o.require(central_element_check(symbolic_family(BialgebraType::TypeIPlus, 6)).passed(), "[C, X] != 0 at K=6");
  o.require(check_realization(symbolic_params(BialgebraType::TypeIPlus, 4), 6, 4).passed(),
            "realization fails for N=6, K=4");
  return o;
}

Outcome poisson_side() {
  Outcome o;
  for (BialgebraType type : kFamilies) {
    const std::string name(type_name(type));
    const FamilyParams params = symbolic_params(type);
    const PoissonStructure ps = PoissonStructure::for_family(type, params);
    o.require(jacobi_check(ps).passed(), name + " Jacobi");
    o.require(poisson_homomorphism_check(ps).passed(), name + " multiplicativity");
    o.require(linear_part_check(ps, family_cocommutator(type, params)).passed(), name + " linear part");
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  auto draw = [&] { return Rational(num(rng)) / den(rng); };
  for (int i = 0; i < 100; ++i) {
    const GroupCoords<Rational> g1{draw(), draw(), draw()}, g2{draw(), draw(), draw()};
    o.require(group_matrix(group_compose(g1, g2)) == Matrix3(group_matrix(g2) * group_matrix(g1)),
              "group law differs from matrix product");
  }
  return o;
}

Outcome duality_of_type_i() {
  Outcome o;
  const int k = kDefaultOrder;
  const HopfPresentation moved = transport_swap(symbolic_family(BialgebraType::TypeIPlus, k));
  const HopfPresentation minus = symbolic_family(BialgebraType::TypeIMinus, k);
  o.require(to_json(render(moved)).dump() == to_json(render(minus)).dump(), "serialized presentations differ");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "constraint derivation", 1, constraint_derivation},
      {2, "classification exhaustiveness", 30, classification_exhaustiveness},
      {3, "coboundary theorem", 1, coboundary_theorem},
      {4, "Hopf theorem, Type I+", 60, hopf_type_i_plus},
      {5, "Hopf theorem, Type II", 120, hopf_type_ii},
      {6, "first-order limit", 5, first_order_limit},
      {7, "centrality and realization", 10, centrality_and_realization},
      {8, "Poisson side", 10, poisson_side},
      {9, "duality of I+ and I-", 10, duality_of_type_i},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) {
      o.ok = false;
      o.note = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    failures += !o.ok;
    std::printf("%s %d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                o.note.empty() ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
