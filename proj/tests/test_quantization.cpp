#include "generators.hpp"

#include "qhw/errors.hpp"
#include "qhw/json_io.hpp"
#include "qhw/quantization.hpp"

#include <doctest.h>

using namespace qhw;

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool all_pass(const std::vector<ResidualReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const ResidualReport& r) { return r.passed(); });
}

Word letters(Gen g, int n) { return Word(n, g); }

TensorElement::Key key(Word a, Word b) { return {std::move(a), std::move(b)}; }

FamilyParams constants(const std::map<Param, Rational>& values, int order) {
  FamilyParams out;
  for (const auto& [p, v] : values) out.emplace(p, ParamPoly::constant(v, order));
  return out;
}

}  // namespace

TEST_SUITE("quantization") {
  TEST_CASE("family parameters") {
    CHECK(family_parameters(BialgebraType::TypeIPlus) == std::vector<Param>{Param::a1, Param::a3});
    CHECK(family_parameters(BialgebraType::TypeIMinus) == std::vector<Param>{Param::b1, Param::b2});
    CHECK(family_parameters(BialgebraType::TypeII) ==
          std::vector<Param>{Param::a2, Param::a3, Param::b2, Param::b3});
    CHECK_THROWS_AS(matrix_delta(BialgebraType::Trivial, {}), UsageError);
  }

  TEST_CASE("Type I+ coproduct coefficients") {
    const int k = 6;
    const auto hp = build_family(BialgebraType::TypeIPlus, symbolic_params(BialgebraType::TypeIPlus, k), k);
    const TensorElement& d = hp.coproduct[static_cast<int>(Gen::AMinus)];
    for (int n = 0; n <= k; ++n) {
      const ParamPoly expected = ParamPoly::monomial(Monomial::of(Param::a1, n), Rational(1) / factorial(n), k);
      CHECK(d.coefficient(key({Gen::AMinus}, letters(Gen::APlus, n))) == expected);
    }
    for (int n = 0; n < k; ++n) {
      const ParamPoly expected = ParamPoly::monomial(Monomial::of(Param::a1, n) * Monomial::of(Param::a3),
                                                     Rational(-1) / factorial(n), k);
      CHECK(d.coefficient(key({Gen::M}, letters(Gen::APlus, n + 1))) == expected);
    }
    const TensorElement& dm = hp.coproduct[static_cast<int>(Gen::M)];
    CHECK(dm.coefficient(key({Gen::M}, letters(Gen::APlus, 2))) ==
          ParamPoly::monomial(Monomial::of(Param::a1, 2), Rational(1, 2), k));
  }

  TEST_CASE("Type II coproduct matches a rational matrix exponential") {
    const int k = 6;
    gen::Source src(201);
    for (int n = 0; n < 5; ++n) {
      const std::map<Param, Rational> values{{Param::a2, src.rational()}, {Param::a3, src.rational()},
                                             {Param::b2, src.rational()}, {Param::b3, src.rational()}};
      const FamilyParams sym = symbolic_params(BialgebraType::TypeII, k);
      const auto coproduct = build_coproduct(BialgebraType::TypeII, sym, k);
      // -N = P M with P = [[a2, a3], [b2, b3]], so E_ij carries (P^m)_ij / m! at M^m.
      Eigen::Matrix<Rational, 2, 2> p;
      p << values.at(Param::a2), values.at(Param::a3), values.at(Param::b2), values.at(Param::b3);
      Eigen::Matrix<Rational, 2, 2> power = Eigen::Matrix<Rational, 2, 2>::Identity();
      const FamilyParams at = constants(values, k);
      const std::array<Gen, 2> v = {Gen::AMinus, Gen::APlus};
      for (int m = 0; m <= k; ++m) {
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            const ParamPoly c = coproduct[static_cast<int>(v[i])].coefficient(key({v[j]}, letters(Gen::M, m)));
            CHECK(substitute(c, at).constant_term() == power(i, j) / factorial(m));
          }
        }
        power = Eigen::Matrix<Rational, 2, 2>(power * p);
      }
    }
  }

  TEST_CASE("Type II relation series") {
    const int k = 5;
    const auto rs = family_rewrite(BialgebraType::TypeII, symbolic_params(BialgebraType::TypeII, k), k);
    const ParamPoly s = ParamPoly::symbol(Param::a2, k) + ParamPoly::symbol(Param::b3, k);
    ParamPoly power = ParamPoly::constant(1, k);
    for (int n = 1; n <= k + 1; ++n) {
      CHECK(rs.commutator_rhs(Gen::AMinus, Gen::APlus).coefficient(letters(Gen::M, n)) ==
            power * (Rational(1) / factorial(n)));
      power = power * s;
    }
    CHECK(confluence_defects(rs).empty());
  }

  TEST_CASE("Hopf axioms for every symbolic family") {
    for (auto type : {BialgebraType::TypeIPlus, BialgebraType::TypeIMinus, BialgebraType::TypeII}) {
      CAPTURE(type_name(type));
      const auto hp = build_family(type, symbolic_params(type, 3), 3);
      const auto reports = verify_hopf(hp);
      CHECK(reports.size() == 4);
      CHECK(all_pass(reports));
      CHECK(first_order_check(hp, family_cocommutator(type, hp.params, 3)).passed());
    }
  }

  TEST_CASE("Hopf axioms for classified rational points") {
    gen::Source src(202);
    for (int n = 0; n < 12; ++n) {
      const auto type = static_cast<BialgebraType>(src.integer(1, 3));
      std::map<Param, Rational> values;
      for (Param p : family_parameters(type)) values[p] = src.rational();
      if (type != BialgebraType::TypeII) values[family_parameters(type)[0]] = src.nonzero_rational();
      if (type == BialgebraType::TypeII && values[Param::a3] == 0 && values[Param::b2] == 0) {
        values[Param::a3] = 1;
      }
      const Cocommutator delta = family_cocommutator(type, constants(values, 3), 3);
      const auto cls = classify(delta);
      CAPTURE(delta.to_string());
      REQUIRE(cls.type == type);
      CHECK(cls.normalized == delta);
      const auto hp = quantize(cls, 3);
      CHECK(all_pass(verify_hopf(hp)));
      CHECK(first_order_check(hp, family_cocommutator(type, hp.params, 3)).passed());
    }
  }

  TEST_CASE("undeformed structure for zero parameters") {
    const auto hp = quantize(classify(Cocommutator()), 4);
    CHECK(hp.type == BialgebraType::Trivial);
    CHECK(all_pass(verify_hopf(hp)));
    CHECK(hp.antipode[static_cast<int>(Gen::AMinus)] == -FreeElement::generator(Gen::AMinus, 4));
    CHECK(hp.rewrite.commutator_rhs(Gen::AMinus, Gen::APlus) == FreeElement::generator(Gen::M, 4));
  }

  TEST_CASE("checks detect broken structures") {
    auto hp = build_family(BialgebraType::TypeIPlus, symbolic_params(BialgebraType::TypeIPlus, 3), 3);
    auto broken = hp;
    broken.coproduct[static_cast<int>(Gen::M)] =
        TensorElement::product(FreeElement::one(3), FreeElement::generator(Gen::M, 3)) +
        TensorElement::product(FreeElement::generator(Gen::M, 3), FreeElement::one(3));
    const bool still_hopf = verify_coassoc(broken).passed() && verify_homomorphism(broken).passed();
    CHECK_FALSE(still_hopf);

    auto undeformed = hp;
    undeformed.rewrite = RewriteSystem::undeformed(3);
    CHECK_FALSE(verify_homomorphism(undeformed).passed());

    auto wrong_antipode = hp;
    wrong_antipode.antipode[static_cast<int>(Gen::M)] = -FreeElement::generator(Gen::M, 3);
    CHECK_FALSE(verify_antipode(wrong_antipode).passed());

    Cocommutator flipped = family_cocommutator(BialgebraType::TypeIPlus, hp.params, 3);
    for (auto& row : flipped.coef) {
      for (auto& c : row) c = -c;
    }
    CHECK_FALSE(first_order_check(hp, flipped).passed());
  }

  TEST_CASE("Type I+ antipode closed form") {
    const int k = 6;
    const auto hp = build_family(BialgebraType::TypeIPlus, symbolic_params(BialgebraType::TypeIPlus, k), k);
    CHECK(type_i_plus_antipode(hp.params, hp.rewrite) == hp.antipode);
    CHECK(hp.antipode[static_cast<int>(Gen::APlus)] == -FreeElement::generator(Gen::APlus, k));
  }

  TEST_CASE("Type II determinant identity") {
    const FreeElement r = type_ii_determinant_residual(symbolic_params(BialgebraType::TypeII, 8), 8);
    CHECK(r.is_zero());
  }

  TEST_CASE("central element and realization") {
    const auto hp = build_family(BialgebraType::TypeIPlus, symbolic_params(BialgebraType::TypeIPlus, 5), 5);
    CHECK(central_element_check(hp).passed());
    CHECK(check_realization(symbolic_params(BialgebraType::TypeIPlus, 4), 5, 4).passed());
    // C = M exp(-a1 A+/2): coefficient of M A+^2 is a1^2/8.
    CHECK(central_element(hp.params, 5).coefficient({Gen::M, Gen::APlus, Gen::APlus}) ==
          ParamPoly::monomial(Monomial::of(Param::a1, 2), Rational(1, 8), 5));
  }

  TEST_CASE("swap transport gives Type I-") {
    const int k = 4;
    const auto plus = build_family(BialgebraType::TypeIPlus, symbolic_params(BialgebraType::TypeIPlus, k), k);
    const auto minus = build_family(BialgebraType::TypeIMinus, symbolic_params(BialgebraType::TypeIMinus, k), k);
    const auto moved = transport_swap(plus);
    CHECK(to_json(render(moved)) == to_json(render(minus)));
    CHECK(all_pass(verify_hopf(moved)));
    CHECK_THROWS_AS(transport_swap(minus), UsageError);
  }

  TEST_CASE("rendering") {
    const auto hp = build_family(BialgebraType::TypeIPlus, symbolic_params(BialgebraType::TypeIPlus, 4), 4);
    const auto p = render(hp);
    CHECK(p.coproduct_closed[0].second == "1 (x) A- + A- (x) exp(a1*A+) - a3*M (x) A+*exp(a1*A+)");
    CHECK(p.relations[1].second == "(1/2)*a1*M^2");
    CHECK(rendered_from_json(to_json(p)).coproduct == p.coproduct);
  }
}
