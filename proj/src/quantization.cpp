#include "qhw/quantization.hpp"

#include "qhw/errors.hpp"

#include <algorithm>
#include <functional>

namespace qhw {

namespace {

constexpr std::array<RewriteSystem::Pair, 3> kRelationPairs = {
    RewriteSystem::Pair{Gen::AMinus, Gen::APlus}, RewriteSystem::Pair{Gen::AMinus, Gen::M},
    RewriteSystem::Pair{Gen::APlus, Gen::M}};

constexpr std::array<Gen, 3> kDisplayGens = {Gen::AMinus, Gen::APlus, Gen::M};

std::size_t slot(Gen g) { return static_cast<std::size_t>(g); }

ParamPoly unit_of(const ParamPoly& c) { return ParamPoly::constant(Rational(1), c.order()); }

std::string relation_label(Gen g, Gen h) {
  return "[" + std::string(gen_name(g)) + "," + std::string(gen_name(h)) + "]";
}

ParamPoly param(const FamilyParams& params, Param p, int order) {
  auto it = params.find(p);
  if (it == params.end()) return ParamPoly(order);
  if (it->second.order() != order) {
    throw UsageError("parameter " + std::string(param_name(p)) + " has truncation order " +
                     std::to_string(it->second.order()) + ", expected " + std::to_string(order));
  }
  return it->second;
}

FreeElement gen(Gen g, int order) { return FreeElement::generator(g, order); }

FreeElement power(Gen g, int n, const ParamPoly& c) { return FreeElement::word(Word(n, g), c); }

Gen primitive_of(BialgebraType type) {
  switch (type) {
    case BialgebraType::TypeIPlus: return Gen::APlus;
    case BialgebraType::TypeIMinus: return Gen::AMinus;
    default: return Gen::M;
  }
}

TensorElement primitive_coproduct(Gen g, int order) {
  return TensorElement::product(FreeElement::one(order), gen(g, order)) +
         TensorElement::product(gen(g, order), FreeElement::one(order));
}

TensorElement substitute(const TensorElement& t, const FamilyParams& values) {
  if (values.empty()) return t;
  TensorElement out(t.rank(), t.order());
  for (const auto& [key, c] : t.terms()) out.add_term(key, substitute(c, values));
  return out;
}

/// (sigma (x) sigma) of a rank-2 tensor, normal-ordered in rs.
TensorElement map_letters(const TensorElement& t, const std::array<FreeElement, 3>& sigma,
                          const RewriteSystem& rs) {
  TensorElement out(2, t.order());
  for (const auto& [key, c] : t.terms()) {
    out += c * TensorElement::product(substitute_letters(FreeElement::word(key[0], unit_of(c)), sigma),
                                      substitute_letters(FreeElement::word(key[1], unit_of(c)), sigma));
  }
  return normal_form(out, rs);
}

RewriteSystem transport_rewrite(const RewriteSystem& source, const std::array<FreeElement, 3>& sigma,
                                std::string name) {
  std::map<RewriteSystem::Pair, FreeElement> rels;
  for (const auto& [g, h] : kRelationPairs) {
    const FreeElement c = commutator(sigma[slot(g)], sigma[slot(h)], source);
    FreeElement image = substitute_letters(c, sigma);
    if (!image.is_normal()) {
      throw ConfigurationError("transported relation " + relation_label(g, h) +
                               " is not in normal order: " + image.to_string());
    }
    rels.emplace(RewriteSystem::Pair{g, h}, std::move(image));
  }
  return RewriteSystem(std::move(name), source.order(), std::move(rels));
}

std::optional<int> value_index(Param p) {
  const int i = static_cast<int>(p);
  if (i >= static_cast<int>(Param::a1) && i <= static_cast<int>(Param::b3)) return i;
  return std::nullopt;
}

/// Memoized structure maps of a presentation.
class HopfMaps {
 public:
  explicit HopfMaps(const HopfPresentation& hp) : hp_(hp) {}

  const TensorElement& delta_word(const Word& w) {
    if (auto it = delta_.find(w); it != delta_.end()) return it->second;
    TensorElement value(2, hp_.order);
    if (w.empty()) {
      value = TensorElement::product(FreeElement::one(hp_.order), FreeElement::one(hp_.order));
    } else {
      const Word prefix(w.begin(), w.end() - 1);
      value = tensor_mul(delta_word(prefix), hp_.coproduct[slot(w.back())], hp_.rewrite);
    }
    return delta_.emplace(w, std::move(value)).first->second;
  }

  TensorElement delta(const FreeElement& x) {
    TensorElement out(2, hp_.order);
    for (const auto& [w, c] : x.terms()) out += c * delta_word(w);
    return out;
  }

  const FreeElement& gamma_word(const Word& w) {
    if (auto it = gamma_.find(w); it != gamma_.end()) return it->second;
    FreeElement value(hp_.order);
    if (w.empty()) {
      value = FreeElement::one(hp_.order);
    } else {
      const Word prefix(w.begin(), w.end() - 1);
      value = multiply(hp_.antipode[slot(w.back())], gamma_word(prefix), hp_.rewrite);
    }
    return gamma_.emplace(w, std::move(value)).first->second;
  }

  FreeElement gamma(const FreeElement& x) {
    FreeElement out(hp_.order);
    for (const auto& [w, c] : x.terms()) out += c * gamma_word(w);
    return out;
  }

  ParamPoly eps_word(const Word& w) const {
    ParamPoly out = ParamPoly::constant(Rational(1), hp_.order);
    for (Gen g : w) out = out * hp_.counit[slot(g)];
    return out;
  }

  ParamPoly eps(const FreeElement& x) const {
    ParamPoly out(hp_.order);
    for (const auto& [w, c] : x.terms()) out += c * eps_word(w);
    return out;
  }

 private:
  const HopfPresentation& hp_;
  std::map<Word, TensorElement> delta_;
  std::map<Word, FreeElement> gamma_;
};

template <typename T>
ResidualEntry entry(std::string label, const T& residual) {
  ResidualEntry e;
  e.label = std::move(label);
  e.zero = residual.is_zero();
  e.lowest_degree = residual.lowest_degree();
  e.text = residual.to_string();
  return e;
}

/// Single-monomial coefficients fold into the term; others are parenthesized.
std::string scaled(const ParamPoly& c, const std::string& body, bool first) {
  if (c.terms().size() == 1) {
    const auto& t = c.terms().front();
    const std::string mono = t.mono.to_string();
    return render_term(t.coef, body == "1" ? mono : join_factors({mono, body}), first);
  }
  return (first ? "" : " + ") + ("(" + c.to_string() + ")*" + body);
}

std::string tensor_term(const ParamPoly& c, const std::string& left, const std::string& right,
                        bool first) {
  return scaled(c, left, first) + " (x) " + right;
}

std::string exp_text(const ParamPoly& c, Gen g) {
  if (c.is_zero()) return "1";
  return "exp(" + scaled(c, std::string(gen_name(g)), true) + ")";
}

}  // namespace

std::vector<Param> family_parameters(BialgebraType type) {
  switch (type) {
    case BialgebraType::TypeIPlus: return {Param::a1, Param::a3};
    case BialgebraType::TypeIMinus: return {Param::b1, Param::b2};
    case BialgebraType::TypeII: return {Param::a2, Param::a3, Param::b2, Param::b3};
    default: return {};
  }
}

FamilyParams symbolic_params(BialgebraType type, int order) {
  FamilyParams out;
  for (Param p : family_parameters(type)) out.emplace(p, ParamPoly::symbol(p, order));
  return out;
}

Cocommutator family_cocommutator(BialgebraType type, const FamilyParams& params, int order) {
  std::array<ParamPoly, 6> ab{ParamPoly(order), ParamPoly(order), ParamPoly(order),
                              ParamPoly(order), ParamPoly(order), ParamPoly(order)};
  for (Param p : family_parameters(type)) ab[*value_index(p)] = param(params, p, order);
  return Cocommutator::with_forced_c(ab);
}

MatrixDelta matrix_delta(BialgebraType type, const FamilyParams& params, int order) {
  auto get = [&](Param p) { return param(params, p, order); };
  switch (type) {
    case BialgebraType::TypeIPlus: {
      const FreeElement x = gen(Gen::APlus, order);
      return {Matrix2(-get(Param::a1) * x, get(Param::a3) * x, FreeElement(order),
                      -get(Param::a1) * x),
              {Gen::AMinus, Gen::M},
              Gen::APlus};
    }
    case BialgebraType::TypeIMinus: {
      const FreeElement x = gen(Gen::AMinus, order);
      return {Matrix2(get(Param::b1) * x, get(Param::b2) * x, FreeElement(order),
                      get(Param::b1) * x),
              {Gen::APlus, Gen::M},
              Gen::AMinus};
    }
    case BialgebraType::TypeII: {
      const FreeElement x = gen(Gen::M, order);
      return {Matrix2(-get(Param::a2) * x, -get(Param::a3) * x, -get(Param::b2) * x,
                      -get(Param::b3) * x),
              {Gen::AMinus, Gen::APlus},
              Gen::M};
    }
    default:
      throw UsageError(std::string(type_name(type)) + " has no matrix form");
  }
}

MatrixDelta matrix_delta(const BialgebraClass& cls, int order) {
  const auto v = cls.normalized.values();
  FamilyParams params;
  for (Param p : family_parameters(cls.type)) {
    params.emplace(p, ParamPoly::constant(v[*value_index(p)], order));
  }
  return matrix_delta(cls.type, params, order);
}

std::array<TensorElement, 3> build_coproduct(BialgebraType type, const FamilyParams& params,
                                             int order) {
  std::array<TensorElement, 3> out{primitive_coproduct(Gen::M, order),
                                   primitive_coproduct(Gen::APlus, order),
                                   primitive_coproduct(Gen::AMinus, order)};
  if (type == BialgebraType::Trivial) return out;
  const MatrixDelta md = matrix_delta(type, params, order);
  const Matrix2 e = exp_matrix2(-md.n);
  for (int i = 0; i < 2; ++i) {
    TensorElement d = TensorElement::product(FreeElement::one(order), gen(md.vector[i], order));
    for (int j = 0; j < 2; ++j) d += TensorElement::product(gen(md.vector[j], order), e(i, j));
    out[slot(md.vector[i])] = std::move(d);
  }
  return out;
}

std::array<FreeElement, 3> swap_letters(int order) {
  return {-gen(Gen::M, order), gen(Gen::AMinus, order), gen(Gen::APlus, order)};
}

RewriteSystem family_rewrite(BialgebraType type, const FamilyParams& params, int order) {
  auto get = [&](Param p) { return param(params, p, order); };
  const FreeElement zero(order);
  switch (type) {
    case BialgebraType::TypeIPlus: {
      std::map<RewriteSystem::Pair, FreeElement> rels;
      rels.emplace(RewriteSystem::Pair{Gen::AMinus, Gen::APlus}, gen(Gen::M, order));
      rels.emplace(RewriteSystem::Pair{Gen::AMinus, Gen::M},
                   power(Gen::M, 2, get(Param::a1) * Rational(1, 2)));
      rels.emplace(RewriteSystem::Pair{Gen::APlus, Gen::M}, zero);
      return RewriteSystem("type I+", order, std::move(rels));
    }
    case BialgebraType::TypeIMinus: {
      FamilyParams plus;
      plus.emplace(Param::a1, -get(Param::b1));
      plus.emplace(Param::a3, -get(Param::b2));
      return transport_rewrite(family_rewrite(BialgebraType::TypeIPlus, plus, order),
                               swap_letters(order), "type I-");
    }
    case BialgebraType::TypeII: {
      // [A-,A+] = sum_{n>=1} s^{n-1} M^n / n!, s = a2 + b3; s^{n-1} has
      // parameter degree n-1, so terms up to M^{K+1} survive.
      const ParamPoly s = get(Param::a2) + get(Param::b3);
      FreeElement series(order);
      ParamPoly c = ParamPoly::constant(Rational(1), order);
      for (int n = 1; n <= order + 1 && !c.is_zero(); ++n) {
        series += power(Gen::M, n, c);
        c = c * s * Rational(1, n + 1);
      }
      std::map<RewriteSystem::Pair, FreeElement> rels;
      rels.emplace(RewriteSystem::Pair{Gen::AMinus, Gen::APlus}, std::move(series));
      rels.emplace(RewriteSystem::Pair{Gen::AMinus, Gen::M}, zero);
      rels.emplace(RewriteSystem::Pair{Gen::APlus, Gen::M}, zero);
      return RewriteSystem("type II", order, std::move(rels));
    }
    default:
      return RewriteSystem::undeformed(order);
  }
}

HopfPresentation build_family(BialgebraType type, const FamilyParams& params, int order) {
  if (type == BialgebraType::Invalid) throw UsageError("cannot quantize an invalid bialgebra");
  HopfPresentation hp;
  hp.type = type;
  for (Param p : family_parameters(type)) {
    ParamPoly v = param(params, p, order);
    if (!v.is_zero()) hp.params.emplace(p, std::move(v));
  }
  hp.order = order;
  hp.primitive = primitive_of(type);
  hp.rewrite = family_rewrite(type, hp.params, order);
  hp.coproduct = build_coproduct(type, hp.params, order);
  hp.counit = {ParamPoly(order), ParamPoly(order), ParamPoly(order)};
  hp.antipode = solve_antipode(hp.coproduct, hp.rewrite);
  return hp;
}

HopfPresentation quantize(const BialgebraClass& cls, int order) {
  if (cls.type == BialgebraType::Invalid) throw UsageError("cannot quantize an invalid bialgebra");
  const auto v = cls.normalized.values();
  FamilyParams params;
  FamilyParams display;
  for (Param p : family_parameters(cls.type)) {
    const Rational& value = v[*value_index(p)];
    if (value == 0) continue;
    params.emplace(p, ParamPoly::symbol(p, order));
    display.emplace(p, ParamPoly::constant(value, order));
  }
  HopfPresentation hp = build_family(cls.type, params, order);
  hp.display = std::move(display);
  return hp;
}

HopfPresentation transport_swap(const HopfPresentation& plus) {
  if (plus.type != BialgebraType::TypeIPlus) {
    throw UsageError("swap transport starts from a Type I+ presentation");
  }
  const int k = plus.order;
  const FamilyParams subst{{Param::a1, -ParamPoly::symbol(Param::b1, k)},
                           {Param::a3, -ParamPoly::symbol(Param::b2, k)}};
  const auto sigma = swap_letters(k);

  HopfPresentation out;
  out.type = BialgebraType::TypeIMinus;
  out.order = k;
  out.primitive = Gen::AMinus;
  const std::array<std::pair<Param, Param>, 2> renames = {std::pair{Param::a1, Param::b1},
                                                          std::pair{Param::a3, Param::b2}};
  for (const auto& [from, to] : renames) {
    if (auto it = plus.params.find(from); it != plus.params.end()) {
      out.params.emplace(to, -substitute(it->second, subst));
    }
    if (auto it = plus.display.find(from); it != plus.display.end()) {
      out.display.emplace(to, -it->second);
    }
  }

  std::map<RewriteSystem::Pair, FreeElement> rels;
  for (const auto& [g, h] : kRelationPairs) {
    rels.emplace(RewriteSystem::Pair{g, h},
                 substitute(plus.rewrite.commutator_rhs(g, h), subst));
  }
  const RewriteSystem source(plus.rewrite.name(), k, std::move(rels));
  out.rewrite = transport_rewrite(source, sigma, "type I-");

  // X' = sigma(X) is +-1 times a letter; Delta'(sigma X) = (sigma(x)sigma) Delta(X).
  for (Gen g : kGenerators) {
    const auto& [word, sign] = *sigma[slot(g)].terms().begin();
    const Gen src = word.front();
    out.coproduct[slot(g)] =
        sign * map_letters(substitute(plus.coproduct[slot(src)], subst), sigma, out.rewrite);
    out.antipode[slot(g)] =
        sign * normal_form(substitute_letters(substitute(plus.antipode[slot(src)], subst), sigma),
                           out.rewrite);
    out.counit[slot(g)] = sign * substitute(plus.counit[slot(src)], subst);
  }
  return out;
}

bool ResidualReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const ResidualEntry& e) { return e.zero; });
}

ResidualReport verify_homomorphism(const HopfPresentation& hp) {
  HopfMaps maps(hp);
  ResidualReport report{"homomorphism", {}};
  for (const auto& [g, h] : kRelationPairs) {
    const TensorElement& dg = hp.coproduct[slot(g)];
    const TensorElement& dh = hp.coproduct[slot(h)];
    const TensorElement residual = tensor_mul(dg, dh, hp.rewrite) - tensor_mul(dh, dg, hp.rewrite) -
                                   maps.delta(hp.rewrite.commutator_rhs(g, h));
    report.entries.push_back(entry(relation_label(g, h), residual));
  }
  return report;
}

ResidualReport verify_coassoc(const HopfPresentation& hp) {
  HopfMaps maps(hp);
  const auto expand = [&maps](const Word& w) { return maps.delta_word(w); };
  ResidualReport report{"coassociativity", {}};
  for (Gen g : kDisplayGens) {
    const TensorElement& d = hp.coproduct[slot(g)];
    report.entries.push_back(
        entry(std::string(gen_name(g)), expand_slot(d, 0, expand) - expand_slot(d, 1, expand)));
  }
  return report;
}

ResidualReport verify_counit(const HopfPresentation& hp) {
  HopfMaps maps(hp);
  const auto eps = [&maps](const Word& w) { return maps.eps_word(w); };
  ResidualReport report{"counit", {}};
  for (Gen g : kDisplayGens) {
    const TensorElement& d = hp.coproduct[slot(g)];
    const FreeElement x = gen(g, hp.order);
    report.entries.push_back(entry("(eps(x)id) " + std::string(gen_name(g)), contract_slot(d, 0, eps) - x));
    report.entries.push_back(entry("(id(x)eps) " + std::string(gen_name(g)), contract_slot(d, 1, eps) - x));
  }
  return report;
}

ResidualReport verify_antipode(const HopfPresentation& hp) {
  HopfMaps maps(hp);
  ResidualReport report{"antipode", {}};
  for (Gen g : kDisplayGens) {
    FreeElement left(hp.order);
    FreeElement right(hp.order);
    for (const auto& [key, c] : hp.coproduct[slot(g)].terms()) {
      const FreeElement l = FreeElement::word(key[0], c);
      const FreeElement r = FreeElement::word(key[1], unit_of(c));
      left += multiply(maps.gamma(l), r, hp.rewrite);
      right += multiply(l, maps.gamma(r), hp.rewrite);
    }
    const FreeElement unit_eps = FreeElement::scalar(hp.counit[slot(g)]);
    report.entries.push_back(entry("m(S(x)id) " + std::string(gen_name(g)), left - unit_eps));
    report.entries.push_back(entry("m(id(x)S) " + std::string(gen_name(g)), right - unit_eps));
  }
  for (const auto& [g, h] : kRelationPairs) {
    const FreeElement& sg = hp.antipode[slot(g)];
    const FreeElement& sh = hp.antipode[slot(h)];
    const FreeElement& rhs = hp.rewrite.commutator_rhs(g, h);
    report.entries.push_back(entry("S" + relation_label(g, h), multiply(sh, sg, hp.rewrite) -
                                                                  multiply(sg, sh, hp.rewrite) -
                                                                  maps.gamma(rhs)));
    report.entries.push_back(entry("eps" + relation_label(g, h), maps.eps(rhs)));
  }
  return report;
}

std::vector<ResidualReport> verify_hopf(const HopfPresentation& hp) {
  return {verify_homomorphism(hp), verify_coassoc(hp), verify_counit(hp), verify_antipode(hp)};
}

ResidualReport first_order_check(const HopfPresentation& hp, const Cocommutator& delta) {
  ResidualReport report{"first order", {}};
  for (Gen g : kDisplayGens) {
    const TensorElement& d = hp.coproduct[slot(g)];
    const TensorElement asym = (d - flip(d)).homogeneous_part(1);
    report.entries.push_back(entry(std::string(gen_name(g)), asym - delta.image(g)));
  }
  return report;
}

std::array<FreeElement, 3> solve_antipode(const std::array<TensorElement, 3>& coproduct,
                                          const RewriteSystem& rs) {
  const int k = rs.order();
  std::array<FreeElement, 3> gamma{-gen(Gen::M, k), -gen(Gen::APlus, k), -gen(Gen::AMinus, k)};

  // gamma(X) * c0 + sum over the other terms gamma(L) R = 0, where c0 is the
  // coefficient of X (x) 1 with constant part k0. Rearranged as a fixed point
  // gamma(X) = -(1/k0) (rest + (c0 - k0) gamma(X)); every term that involves
  // the unknown carries positive degree, so each pass fixes one more degree.
  auto step = [&](const std::array<FreeElement, 3>& current) {
    std::map<Word, FreeElement> memo;
    std::function<const FreeElement&(const Word&)> anti = [&](const Word& w) -> const FreeElement& {
      if (auto it = memo.find(w); it != memo.end()) return it->second;
      FreeElement v = w.empty() ? FreeElement::one(k)
                                : multiply(current[slot(w.back())],
                                           anti(Word(w.begin(), w.end() - 1)), rs);
      return memo.emplace(w, std::move(v)).first->second;
    };
    std::array<FreeElement, 3> next{FreeElement(k), FreeElement(k), FreeElement(k)};
    for (Gen g : kGenerators) {
      const TensorElement& d = coproduct[slot(g)];
      const ParamPoly c0 = d.coefficient({Word{g}, Word{}});
      const Rational k0 = c0.constant_term();
      if (k0 == 0) {
        throw InconsistencyError("coproduct of " + std::string(gen_name(g)) +
                                 " has no invertible X(x)1 term");
      }
      FreeElement rest(k);
      for (const auto& [key, c] : d.terms()) {
        const bool lead = key[0] == Word{g} && key[1].empty();
        const ParamPoly coef = lead ? c - ParamPoly::constant(k0, k) : c;
        if (coef.is_zero()) continue;
        rest += coef * multiply(anti(key[0]), FreeElement::word(key[1], unit_of(coef)), rs);
      }
      next[slot(g)] = rest * Rational(-1 / k0);
    }
    return next;
  };

  for (int pass = 0; pass <= k; ++pass) gamma = step(gamma);
  if (step(gamma) != gamma) {
    throw InconsistencyError("antipode iteration does not stabilize at order " + std::to_string(k));
  }

  HopfPresentation probe;
  probe.order = k;
  probe.rewrite = rs;
  probe.coproduct = coproduct;
  probe.counit = {ParamPoly(k), ParamPoly(k), ParamPoly(k)};
  probe.antipode = gamma;
  const ResidualReport check = verify_antipode(probe);
  for (const auto& e : check.entries) {
    if (!e.zero) {
      throw InconsistencyError("no antipode at order " + std::to_string(k) + ": " + e.label +
                               " leaves " + e.text);
    }
  }
  return gamma;
}

std::array<FreeElement, 3> type_i_plus_antipode(const FamilyParams& params, const RewriteSystem& rs) {
  const int k = rs.order();
  const ParamPoly a1 = param(params, Param::a1, k);
  const ParamPoly a3 = param(params, Param::a3, k);
  const FreeElement e = exp_element(-a1 * gen(Gen::APlus, k));
  const FreeElement m = gen(Gen::M, k);
  const FreeElement am = gen(Gen::AMinus, k);
  const FreeElement ap = gen(Gen::APlus, k);
  std::array<FreeElement, 3> out{FreeElement(k), FreeElement(k), FreeElement(k)};
  out[slot(Gen::APlus)] = -ap;
  out[slot(Gen::M)] = -normal_form(m * e, rs);
  out[slot(Gen::AMinus)] = -normal_form(am * e, rs) - a3 * normal_form(m * ap * e, rs);
  return out;
}

FreeElement type_ii_determinant_residual(const FamilyParams& params, int order) {
  const MatrixDelta md = matrix_delta(BialgebraType::TypeII, params, order);
  const Matrix2 e = exp_matrix2(-md.n);
  const ParamPoly s = param(params, Param::a2, order) + param(params, Param::b3, order);
  return determinant(e) - exp_element(s * gen(Gen::M, order));
}

FreeElement central_element(const FamilyParams& params, int order) {
  const ParamPoly a1 = param(params, Param::a1, order);
  return gen(Gen::M, order) * exp_element(a1 * Rational(-1, 2) * gen(Gen::APlus, order));
}

ResidualReport central_element_check(const HopfPresentation& hp) {
  if (hp.type != BialgebraType::TypeIPlus) throw UsageError("central element is defined for Type I+");
  const int k = hp.order;
  const FreeElement c = central_element(hp.params, k);
  ResidualReport report{"central element", {}};
  for (Gen g : kDisplayGens) {
    report.entries.push_back(
        entry("[C," + std::string(gen_name(g)) + "]", commutator(c, gen(g, k), hp.rewrite)));
  }
  const ParamPoly a1 = param(hp.params, Param::a1, k);
  const FreeElement half = exp_element(a1 * Rational(1, 2) * gen(Gen::APlus, k));
  report.entries.push_back(entry("[A-,A+] - C exp(a1 A+/2)",
                                 commutator(gen(Gen::AMinus, k), gen(Gen::APlus, k), hp.rewrite) -
                                     multiply(c, half, hp.rewrite)));
  return report;
}

namespace {

/// Polynomial in x with parameter-polynomial coefficients.
class XPoly {
 public:
  explicit XPoly(int order) : order_(order) {}
  static XPoly monomial(int n, const ParamPoly& c) {
    XPoly p(c.order());
    p.add(n, c);
    return p;
  }

  void add(int n, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  XPoly& operator+=(const XPoly& o) {
    for (const auto& [n, c] : o.terms_) add(n, c);
    return *this;
  }
  XPoly scaled(const ParamPoly& c) const {
    XPoly out(order_);
    for (const auto& [n, v] : terms_) out.add(n, v * c);
    return out;
  }
  XPoly times(const XPoly& o) const {
    XPoly out(order_);
    for (const auto& [n, c] : terms_) {
      for (const auto& [m, d] : o.terms_) out.add(n + m, c * d);
    }
    return out;
  }
  XPoly derivative() const {
    XPoly out(order_);
    for (const auto& [n, c] : terms_) {
      if (n > 0) out.add(n - 1, c * Rational(n));
    }
    return out;
  }
  XPoly shifted() const {
    XPoly out(order_);
    for (const auto& [n, c] : terms_) out.add(n + 1, c);
    return out;
  }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> lowest_degree() const {
    std::optional<int> best;
    for (const auto& [n, c] : terms_) {
      auto d = c.lowest_degree();
      if (d && (!best || *d < *best)) best = d;
    }
    return best;
  }
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [n, c] : terms_) {
      const std::string x = n == 0 ? "" : n == 1 ? "x" : "x^" + std::to_string(n);
      out += (out.empty() ? "" : " + ") + ("(" + c.to_string() + ")" + (x.empty() ? "" : "*" + x));
    }
    return out;
  }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a += b.scaled(ParamPoly::constant(Rational(-1), b.order_)); }

 private:
  int order_;
  std::map<int, ParamPoly> terms_;
};

}  // namespace

ResidualReport check_realization(const FamilyParams& params, int max_degree, int order) {
  const ParamPoly a1 = param(params, Param::a1, order);
  const ParamPoly lambda = ParamPoly::symbol(Param::lambda, order);

  // e^{a1 x/2} expanded until the coefficients vanish under truncation.
  XPoly weight(order);
  ParamPoly c = ParamPoly::constant(Rational(1), order);
  for (int n = 0; !c.is_zero(); ++n) {
    weight.add(n, c);
    c = c * a1 * Rational(1, 2 * (n + 1));
  }
  const XPoly lambda_weight = weight.scaled(lambda);

  auto act = [&](Gen g, const XPoly& f) {
    switch (g) {
      case Gen::APlus: return f.shifted();
      case Gen::AMinus: return lambda_weight.times(f.derivative());
      case Gen::M: return lambda_weight.times(f);
    }
    return f;
  };
  auto apply = [&](const FreeElement& x, const XPoly& f) {
    XPoly out(order);
    for (const auto& [w, coef] : x.terms()) {
      XPoly v = f;
      for (auto it = w.rbegin(); it != w.rend(); ++it) v = act(*it, v);
      out += v.scaled(coef);
    }
    return out;
  };

  const FreeElement am = gen(Gen::AMinus, order);
  const FreeElement ap = gen(Gen::APlus, order);
  const FreeElement m = gen(Gen::M, order);
  const FreeElement central = central_element(params, order);
  const std::array<std::pair<std::string, FreeElement>, 4> checks = {
      std::pair{std::string("[A-,A+] - M"), am * ap - ap * am - m},
      std::pair{std::string("[A-,M] - (a1/2) M^2"), am * m - m * am - (a1 * Rational(1, 2)) * (m * m)},
      std::pair{std::string("[A+,M]"), ap * m - m * ap},
      std::pair{std::string("C - lambda"), central - FreeElement::scalar(lambda)}};

  ResidualReport report{"realization", {}};
  for (const auto& [label, element] : checks) {
    ResidualEntry e;
    e.label = label;
    e.text = "0";
    for (int n = 0; n <= max_degree && e.zero; ++n) {
      const XPoly r = apply(element, XPoly::monomial(n, ParamPoly::constant(Rational(1), order)));
      if (!r.is_zero()) {
        e.zero = false;
        e.lowest_degree = r.lowest_degree();
        e.text = "on x^" + std::to_string(n) + ": " + r.to_string();
      }
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

RenderedPresentation render(const HopfPresentation& hp) {
  const int k = hp.order;
  auto shown = [&](const ParamPoly& p) { return hp.display.empty() ? p : substitute(p, hp.display); };
  auto shown_element = [&](const FreeElement& x) {
    return hp.display.empty() ? x : substitute(x, hp.display);
  };

  RenderedPresentation out;
  out.family = std::string(type_name(hp.type));
  out.order = k;
  out.primitive = std::string(gen_name(hp.primitive));
  for (Param p : family_parameters(hp.type)) {
    out.params.emplace_back(std::string(param_name(p)), shown(param(hp.params, p, k)).to_string());
  }

  for (const auto& [g, h] : kRelationPairs) {
    const std::string label = relation_label(g, h);
    const std::string series = shown_element(hp.rewrite.commutator_rhs(g, h)).to_string();
    out.relations.emplace_back(label, series);
    std::string closed = series;
    if (hp.type == BialgebraType::TypeII && g == Gen::AMinus && h == Gen::APlus) {
      const ParamPoly s = shown(param(hp.params, Param::a2, k) + param(hp.params, Param::b3, k));
      if (!s.is_zero()) {
        closed = "(" + exp_text(s, Gen::M) + " - 1)/(" + s.to_string() + ")";
      }
    }
    out.relations_closed.emplace_back(label, closed);
  }

  for (Gen g : kDisplayGens) {
    const std::string name(gen_name(g));
    out.coproduct.emplace_back(name, substitute(hp.coproduct[slot(g)], hp.display).to_string());
    out.counit.emplace_back(name, shown(hp.counit[slot(g)]).to_string());
    out.antipode.emplace_back(name, shown_element(hp.antipode[slot(g)]).to_string());
  }

  // Closed coproduct: Delta(v_i) = 1(x)v_i + sum_j v_j (x) E_ij with E = exp(-N).
  std::map<Gen, std::string> closed;
  for (Gen g : kGenerators) closed[g] = "1 (x) " + std::string(gen_name(g)) + " + " + std::string(gen_name(g)) + " (x) 1";
  if (hp.type != BialgebraType::Trivial) {
    const MatrixDelta md = matrix_delta(hp.type, hp.params, k);
    const std::string x(gen_name(md.primitive));
    const std::string v0(gen_name(md.vector[0]));
    const std::string v1(gen_name(md.vector[1]));
    auto coef = [&](int i, int j) {
      return shown(-md.n(i, j).coefficient(Word{md.primitive}));
    };
    if (coef(1, 0).is_zero() && coef(0, 0) == coef(1, 1)) {
      // exp([[d X, u X], [0, d X]]) = exp(d X) [[1, u X], [0, 1]].
      const std::string e = exp_text(coef(0, 0), md.primitive);
      const ParamPoly one = ParamPoly::constant(Rational(1), k);
      std::string d0 = tensor_term(one, "1", v0, true) + tensor_term(one, v0, e, false);
      if (!coef(0, 1).is_zero()) {
        d0 += tensor_term(coef(0, 1), v1, e == "1" ? x : x + "*" + e, false);
      }
      closed[md.vector[0]] = d0;
      closed[md.vector[1]] = tensor_term(one, "1", v1, true) + tensor_term(one, v1, e, false);
    } else {
      const ParamPoly one = ParamPoly::constant(Rational(1), k);
      for (int i = 0; i < 2; ++i) {
        const std::string vi(gen_name(md.vector[i]));
        std::string d = tensor_term(one, "1", vi, true);
        for (int j = 0; j < 2; ++j) {
          d += tensor_term(one, std::string(gen_name(md.vector[j])),
                           "E" + std::to_string(i + 1) + std::to_string(j + 1) + "(" + x + ")", false);
        }
        closed[md.vector[i]] = d;
      }
      std::string rows;
      for (int i = 0; i < 2; ++i) {
        rows += (i ? ", (" : "(");
        for (int j = 0; j < 2; ++j) {
          rows += (j ? ", " : "") + (coef(i, j).is_zero() ? std::string("0") : scaled(coef(i, j), x, true));
        }
        rows += ")";
      }
      out.legend = "E(" + x + ") = exp((" + rows + "))";
    }
  }
  for (Gen g : kDisplayGens) out.coproduct_closed.emplace_back(std::string(gen_name(g)), closed[g]);
  return out;
}

}  // namespace qhw
