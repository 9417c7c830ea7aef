#include "generators.hpp"

#include "qhw/errors.hpp"
#include "qhw/param_poly.hpp"
#include "qhw/rewrite.hpp"
#include "qhw/series.hpp"
#include "qhw/tensor.hpp"

#include <doctest.h>

#include <map>

using namespace qhw;

namespace {

using Point = std::array<Rational, kParamCount>;

Rational eval(const ParamPoly& p, const Point& at) {
  Rational sum;
  for (const auto& t : p.terms()) {
    Rational v = t.coef;
    for (int i = 0; i < kParamCount; ++i) {
      for (int e = 0; e < t.mono.exponent(static_cast<Param>(i)); ++e) v *= at[i];
    }
    sum += v;
  }
  return sum;
}

Point random_point(gen::Source& src) {
  Point p;
  for (auto& v : p) v = src.rational();
  return p;
}

// Faithful representation of the undeformed algebra on Q[x, h]:
// A- = h d/dx, A+ = x, M = h. Keys are (power of x, power of h).
using Poly2 = std::map<std::pair<int, int>, Rational>;

Poly2 act(Gen g, const Poly2& f) {
  Poly2 out;
  for (const auto& [k, c] : f) {
    const auto [n, m] = k;
    switch (g) {
      case Gen::AMinus:
        if (n > 0) out[{n - 1, m + 1}] += c * n;
        break;
      case Gen::APlus:
        out[{n + 1, m}] += c;
        break;
      case Gen::M:
        out[{n, m + 1}] += c;
        break;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly2 act(const FreeElement& x, const Poly2& f) {
  Poly2 out;
  for (const auto& [w, c] : x.terms()) {
    REQUIRE(c.is_constant());
    Poly2 v = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = act(*it, v);
    for (const auto& [k, a] : v) out[k] += a * c.constant_term();
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("parse and print") {
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
  }

  TEST_CASE("round trip") {
    gen::Source src(11);
    for (int i = 0; i < gen::kCases; ++i) {
      const Rational r = src.rational(50);
      CHECK(parse_rational(to_string(r)) == r);
    }
  }
}

TEST_SUITE("param_poly") {
  TEST_CASE("rendering is graded-lex") {
    const ParamPoly a1 = ParamPoly::symbol(Param::a1);
    const ParamPoly a2 = ParamPoly::symbol(Param::a2);
    const ParamPoly b3 = ParamPoly::symbol(Param::b3);
    const ParamPoly p = a2 * b3 - Rational(1, 2) * a1 * a1 + ParamPoly::constant(1);
    CHECK(p.to_string() == "1 - (1/2)*a1^2 + a2*b3");
    CHECK(ParamPoly().to_string() == "0");
    CHECK(param_from_name("beta_plus") == Param::beta_plus);
    CHECK_FALSE(param_from_name("d1").has_value());
  }

  TEST_CASE("truncation drops high degrees") {
    const ParamPoly a1 = ParamPoly::symbol(Param::a1, 3);
    ParamPoly p = ParamPoly::constant(1, 3);
    for (int i = 0; i < 5; ++i) p = p * (ParamPoly::constant(1, 3) + a1);
    // (1 + a1)^5 up to a1^3.
    CHECK(p.to_string() == "1 + 5*a1 + 10*a1^2 + 10*a1^3");
    CHECK(p.highest_degree() == 3);
  }

  TEST_CASE("mixed orders are rejected") {
    CHECK_THROWS_AS(ParamPoly::symbol(Param::a1, 3) + ParamPoly::symbol(Param::a1, 4), UsageError);
  }

  TEST_CASE("ring laws against evaluation") {
    gen::Source src(12);
    for (int i = 0; i < gen::kCases; ++i) {
      // Order 8 with degree <= 2 factors: products of three never truncate.
      const ParamPoly p = src.poly(8), q = src.poly(8), r = src.poly(8);
      const Point at = random_point(src);
      CHECK(eval(p * q, at) == eval(p, at) * eval(q, at));
      CHECK(eval(p + q, at) == eval(p, at) + eval(q, at));
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p * q == q * p);
      CHECK(p - p == ParamPoly(8));
    }
  }

  TEST_CASE("product truncation equals truncated product") {
    gen::Source src(13);
    for (int i = 0; i < gen::kCases; ++i) {
      const ParamPoly p = src.poly(kMaxOrder, 4, 3), q = src.poly(kMaxOrder, 4, 3);
      const int k = src.integer(1, 5);
      CHECK((p.truncated(k) * q.truncated(k)) == (p * q).truncated(k));
    }
  }

  TEST_CASE("substitution composes with evaluation") {
    gen::Source src(14);
    for (int i = 0; i < gen::kCases; ++i) {
      const ParamPoly p = src.poly(8, 3, 2);
      const ParamPoly image = src.poly(8, 2, 1);
      const Param target = src.param();
      Point at = random_point(src);
      const ParamPoly s = substitute(p, {{target, image}});
      Point moved = at;
      moved[static_cast<int>(target)] = eval(image, at);
      CHECK(eval(s, at) == eval(p, moved));
    }
  }
}

TEST_SUITE("free_element") {
  TEST_CASE("canonical rendering") {
    const FreeElement m = FreeElement::generator(Gen::M);
    const FreeElement am = FreeElement::generator(Gen::AMinus);
    const FreeElement x = Rational(1, 2) * ParamPoly::symbol(Param::a1) * (m * m * am);
    CHECK(x.to_string() == "(1/2)*a1*M^2*A-");
    CHECK(FreeElement().to_string() == "0");
    CHECK((FreeElement::one() - FreeElement::generator(Gen::APlus)).to_string() == "1 - A+");
  }

  TEST_CASE("concatenation is associative and unital") {
    gen::Source src(21);
    for (int i = 0; i < gen::kCases; ++i) {
      const FreeElement x = src.element(6), y = src.element(6), z = src.element(6);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * FreeElement::one(6) == x);
      CHECK(x * (y + z) == x * y + x * z);
    }
  }

  TEST_CASE("letter substitution is multiplicative") {
    gen::Source src(22);
    for (int i = 0; i < gen::kCases; ++i) {
      const std::array<FreeElement, 3> images{src.element(6, 2, 2), src.element(6, 2, 2),
                                              src.element(6, 2, 2)};
      const FreeElement x = src.element(6, 2, 2), y = src.element(6, 2, 2);
      CHECK(substitute_letters(x * y, images) == substitute_letters(x, images) * substitute_letters(y, images));
    }
  }
}

TEST_SUITE("rewrite") {
  TEST_CASE("undeformed commutators") {
    const auto rs = RewriteSystem::undeformed();
    const FreeElement am = FreeElement::generator(Gen::AMinus);
    const FreeElement ap = FreeElement::generator(Gen::APlus);
    CHECK(normal_form(am * ap, rs).to_string() == "M + A+*A-");
    CHECK(commutator(am, ap, rs).to_string() == "M");
    // [A-, A+^3] = 3 M A+^2.
    CHECK(commutator(am, ap * ap * ap, rs).to_string() == "3*M*A+^2");
    CHECK(confluence_defects(rs).empty());
  }

  TEST_CASE("normal form matches a faithful representation") {
    const auto rs = RewriteSystem::undeformed();
    gen::Source src(31);
    for (int i = 0; i < gen::kCases; ++i) {
      FreeElement x(6);
      for (int t = 0; t < 3; ++t) x.add_term(src.word(5), ParamPoly::constant(src.rational(), 6));
      const FreeElement nf = normal_form(x, rs);
      CHECK(nf.is_normal());
      for (int n = 0; n <= 4; ++n) {
        const Poly2 f{{{n, 0}, Rational(1)}};
        CHECK(act(nf, f) == act(x, f));
      }
    }
  }

  TEST_CASE("normal form is idempotent and products associate") {
    std::map<RewriteSystem::Pair, FreeElement> rels;
    const FreeElement m = FreeElement::generator(Gen::M, 5);
    rels.emplace(RewriteSystem::Pair{Gen::AMinus, Gen::APlus}, m);
    rels.emplace(RewriteSystem::Pair{Gen::AMinus, Gen::M}, Rational(1, 2) * ParamPoly::symbol(Param::a1, 5) * (m * m));
    rels.emplace(RewriteSystem::Pair{Gen::APlus, Gen::M}, FreeElement(5));
    const RewriteSystem rs("deformed", 5, rels);
    CHECK(confluence_defects(rs).empty());
    gen::Source src(32);
    for (int i = 0; i < gen::kCases / 2; ++i) {
      const FreeElement x = src.element(5, 2, 2), y = src.element(5, 2, 2), z = src.element(5, 2, 2);
      const FreeElement nx = normal_form(x, rs);
      CHECK(normal_form(nx, rs) == nx);
      CHECK(multiply(multiply(x, y, rs), z, rs) == multiply(x, multiply(y, z, rs), rs));
    }
  }

  TEST_CASE("inconsistent relations are refused") {
    const FreeElement m = FreeElement::generator(Gen::M);
    const FreeElement am = FreeElement::generator(Gen::AMinus);
    const FreeElement ap = FreeElement::generator(Gen::APlus);
    std::map<RewriteSystem::Pair, FreeElement> jacobi_broken{
        {{Gen::AMinus, Gen::APlus}, m}, {{Gen::AMinus, Gen::M}, am}, {{Gen::APlus, Gen::M}, FreeElement()}};
    CHECK_THROWS_AS(RewriteSystem("broken", kDefaultOrder, jacobi_broken), ConfigurationError);
    std::map<RewriteSystem::Pair, FreeElement> not_terminating{
        {{Gen::AMinus, Gen::APlus}, m}, {{Gen::AMinus, Gen::M}, FreeElement()}, {{Gen::APlus, Gen::M}, m * ap}};
    CHECK_THROWS_AS(RewriteSystem("loop", kDefaultOrder, not_terminating), ConfigurationError);
  }
}

TEST_SUITE("tensor") {
  TEST_CASE("rendering and flip") {
    const FreeElement am = FreeElement::generator(Gen::AMinus);
    const FreeElement ap = FreeElement::generator(Gen::APlus);
    TensorElement d = TensorElement::product(FreeElement::one(), am) + TensorElement::product(am, FreeElement::one());
    d += ParamPoly::symbol(Param::a1) * TensorElement::product(am, ap);
    CHECK(d.to_string() == "1 (x) A- + A- (x) 1 + a1*A- (x) A+");
    CHECK(flip(d).to_string() == "1 (x) A- + A- (x) 1 + a1*A+ (x) A-");
  }

  TEST_CASE("flip is an involution and products associate") {
    const auto rs = RewriteSystem::undeformed(5);
    gen::Source src(41);
    auto tensor = [&] {
      TensorElement u(2, 5);
      for (int t = 0; t < 3; ++t) u += TensorElement::product(src.element(5, 1, 2), src.element(5, 1, 2));
      return u;
    };
    for (int i = 0; i < gen::kCases / 2; ++i) {
      const TensorElement u = tensor(), v = tensor(), w = tensor();
      CHECK(flip(flip(u)) == u);
      CHECK(tensor_mul(tensor_mul(u, v, rs), w, rs) == tensor_mul(u, tensor_mul(v, w, rs), rs));
      CHECK(flip(tensor_mul(u, v, rs)) == tensor_mul(flip(u), flip(v), rs));
    }
  }

  TEST_CASE("slot maps") {
    const FreeElement ap = FreeElement::generator(Gen::APlus);
    const TensorElement u = TensorElement::product(ap, ap * ap);
    const TensorElement e = expand_slot(u, 1, [](const Word& w) {
      return TensorElement::product(FreeElement::word(w, ParamPoly::constant(1)), FreeElement::one());
    });
    CHECK(e.rank() == 3);
    CHECK(e.to_string() == "A+ (x) A+^2 (x) 1");
    const FreeElement c = contract_slot(u, 0, [](const Word& w) { return ParamPoly::constant(Rational(static_cast<long>(w.size()))); });
    CHECK(c.to_string() == "A+^2");
  }
}

TEST_SUITE("series") {
  TEST_CASE("exponential coefficients") {
    const ParamPoly a1 = ParamPoly::symbol(Param::a1);
    const FreeElement x = a1 * FreeElement::generator(Gen::APlus);
    const FreeElement e = exp_element(x);
    for (int n = 0; n <= kDefaultOrder; ++n) {
      const Word w(n, Gen::APlus);
      CHECK(e.coefficient(w) == ParamPoly::monomial(Monomial::of(Param::a1, n), Rational(1) / factorial(n)));
    }
    CHECK(e.terms().size() == static_cast<std::size_t>(kDefaultOrder + 1));
    CHECK(nc_mul(e, exp_element(-x)) == FreeElement::one());
    CHECK_THROWS_AS(exp_element(FreeElement::generator(Gen::APlus)), NonNilpotentError);
  }

  TEST_CASE("det exp equals exp trace") {
    gen::Source src(51);
    const int k = 5;
    const FreeElement m = FreeElement::generator(Gen::M, k);
    for (int i = 0; i < gen::kCases / 3; ++i) {
      Matrix2 n(k);
      for (auto& entry : n.entries) {
        ParamPoly c(k);
        for (int t = 0; t < 2; ++t) c += ParamPoly::monomial(Monomial::of(src.param()), src.rational(), k);
        entry = c * m;
      }
      const Matrix2 e = exp_matrix2(n);
      CHECK(determinant(e) == exp_element(n(0, 0) + n(1, 1)));
      CHECK(exp_matrix2(-n) * e == Matrix2::identity(k));
    }
  }

  TEST_CASE("mixed generators are unsupported") {
    const ParamPoly a1 = ParamPoly::symbol(Param::a1);
    const Matrix2 n(a1 * FreeElement::generator(Gen::M), FreeElement(), FreeElement(),
                    a1 * FreeElement::generator(Gen::APlus));
    CHECK_THROWS_AS(exp_matrix2(n), UnsupportedMatrixError);
  }
}
