#include "qhw/poisson.hpp"

#include "qhw/errors.hpp"

#include <algorithm>

namespace qhw {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "a-", "a+", "m", "a-'", "a+'", "m'", "a-''", "a+''", "m''", "x1", "x2", "x3"};

int idx(Var v) { return static_cast<int>(v); }

/// Bracket of two coordinate variables, or zero across copies.
CoordPoly var_bracket(Var u, Var v, const PoissonStructure& ps) {
  const int order = ps.order();
  const int cu = idx(u) / 3;
  const int cv = idx(v) / 3;
  if (cu != cv || u == v) return CoordPoly(order);
  const int iu = idx(u) % 3;
  const int iv = idx(v) % 3;
  // brackets[] holds {0,1}, {0,2}, {1,2}.
  const int lo = std::min(iu, iv);
  const int hi = std::max(iu, iv);
  const int which = lo == 0 ? hi - 1 : 2;
  CoordPoly b = ps.brackets[which];
  if (cu != 0) {
    std::map<Var, CoordPoly> rename;
    for (int i = 0; i < 3; ++i) rename.emplace(coord(0, i), CoordPoly::variable(coord(cu, i), order));
    b = b.substitute(rename);
  }
  return iu < iv ? b : -b;
}

template <typename T>
ResidualEntry entry(std::string label, const T& residual) {
  return {std::move(label), residual.is_zero(), residual.lowest_degree(), residual.to_string()};
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[idx(v)]; }

Var coord(int copy, int index) { return static_cast<Var>(3 * copy + index); }

CoordPoly CoordPoly::constant(const ParamPoly& c) {
  CoordPoly p(c.order());
  p.add_term(Exponents{}, c);
  return p;
}

CoordPoly CoordPoly::constant(const Rational& c, int order) {
  return constant(ParamPoly::constant(c, order));
}

CoordPoly CoordPoly::variable(Var v, int order) {
  CoordPoly p(order);
  Exponents e{};
  e[idx(v)] = 1;
  p.add_term(e, ParamPoly::constant(Rational(1), order));
  return p;
}

std::optional<int> CoordPoly::lowest_degree() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    auto d = c.lowest_degree();
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

CoordPoly CoordPoly::homogeneous_part(int d) const {
  CoordPoly out(order_);
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (auto x : e) deg += x;
    if (deg == d) out.add_term(e, c);
  }
  return out;
}

bool CoordPoly::uses(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[idx(v)] != 0; });
}

void CoordPoly::add_term(const Exponents& e, const ParamPoly& c) {
  if (c.order() != order_) throw UsageError("coefficient order differs from polynomial order");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoordPoly CoordPoly::operator-() const {
  CoordPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

CoordPoly& CoordPoly::operator+=(const CoordPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

CoordPoly& CoordPoly::operator-=(const CoordPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

CoordPoly& CoordPoly::operator*=(const ParamPoly& c) {
  CoordPoly out(order_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return *this = std::move(out);
}

CoordPoly operator*(const CoordPoly& a, const CoordPoly& b) {
  if (a.order_ != b.order_) throw UsageError("mismatched truncation orders in coordinate product");
  CoordPoly out(a.order_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      CoordPoly::Exponents e;
      for (int i = 0; i < kVarCount; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

CoordPoly CoordPoly::derivative(Var v) const {
  CoordPoly out(order_);
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] == 0) continue;
    Exponents lowered = e;
    --lowered[idx(v)];
    out.add_term(lowered, c * Rational(e[idx(v)]));
  }
  return out;
}

CoordPoly CoordPoly::substitute(const std::map<Var, CoordPoly>& images) const {
  CoordPoly out(order_);
  for (const auto& [e, c] : terms_) {
    CoordPoly term = CoordPoly::constant(c);
    Exponents rest = e;
    for (const auto& [v, image] : images) {
      for (int k = 0; k < e[idx(v)]; ++k) term = term * image;
      rest[idx(v)] = 0;
    }
    CoordPoly kept(order_);
    kept.add_term(rest, ParamPoly::constant(Rational(1), order_));
    out += term * kept;
  }
  return out;
}

std::string CoordPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Lower coordinate degree first, then variables in declaration order.
  std::vector<std::pair<Exponents, const ParamPoly*>> sorted;
  for (const auto& [e, c] : terms_) sorted.emplace_back(e, &c);
  auto degree = [](const Exponents& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  };
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& l, const auto& r) {
    if (degree(l.first) != degree(r.first)) return degree(l.first) < degree(r.first);
    return l.first > r.first;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    std::vector<std::string> vars;
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      std::string name(kVarNames[i]);
      if (e[i] > 1) name += "^" + std::to_string(e[i]);
      vars.push_back(std::move(name));
    }
    const std::string body = join_factors(vars);
    for (const auto& t : c->terms()) {
      out += render_term(t.coef, join_factors({t.mono.to_string(), body}), out.empty());
    }
  }
  return out;
}

Matrix3 group_matrix(const GroupCoords<Rational>& g) {
  Matrix3 d = Matrix3::Identity();
  d(0, 1) = g.a_minus;
  d(0, 2) = g.m + g.a_minus * g.a_plus;
  d(1, 2) = g.a_plus;
  return d;
}

GroupCoords<Rational> group_coords(const Matrix3& d) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (d(i, j) != (i == j ? 1 : 0)) throw UsageError("matrix is not a Heisenberg group element");
    }
  }
  return {d(0, 2) - d(0, 1) * d(1, 2), d(0, 1), d(1, 2)};
}

GroupCoords<CoordPoly> symbolic_coords(int copy, int order) {
  return {CoordPoly::variable(coord(copy, 2), order), CoordPoly::variable(coord(copy, 0), order),
          CoordPoly::variable(coord(copy, 1), order)};
}

PoissonStructure PoissonStructure::from_coefficients(const std::array<ParamPoly, 6>& ab) {
  const int order = ab[0].order();
  const ParamPoly &a1 = ab[0], &a2 = ab[1], &a3 = ab[2], &b1 = ab[3], &b2 = ab[4], &b3 = ab[5];
  const CoordPoly am = CoordPoly::variable(Var::am, order);
  const CoordPoly ap = CoordPoly::variable(Var::ap, order);
  const CoordPoly m = CoordPoly::variable(Var::m, order);
  const Rational half(1, 2);
  return {{a1 * am + b1 * ap,
           a2 * am + b2 * ap + b1 * m - (a1 * half) * (am * am),
           a3 * am + b3 * ap - a1 * m + (b1 * half) * (ap * ap)}};
}

PoissonStructure PoissonStructure::from_cocommutator(const Cocommutator& delta) {
  return from_coefficients({delta.a(1), delta.a(2), delta.a(3), delta.b(1), delta.b(2), delta.b(3)});
}

PoissonStructure PoissonStructure::for_family(BialgebraType type, const FamilyParams& params,
                                              int order) {
  return from_cocommutator(family_cocommutator(type, params, order));
}

CoordPoly pl_bracket(const CoordPoly& f, const CoordPoly& g, const PoissonStructure& ps) {
  for (Var v : {Var::x1, Var::x2, Var::x3}) {
    if (f.uses(v) || g.uses(v)) {
      throw UsageError("the bracket is defined on (a-, a+, m) coordinates, not on " +
                       std::string(var_name(v)));
    }
  }
  CoordPoly out(ps.order());
  for (int i = 0; i < idx(Var::x1); ++i) {
    const CoordPoly df = f.derivative(static_cast<Var>(i));
    if (df.is_zero()) continue;
    for (int j = 0; j < idx(Var::x1); ++j) {
      if (i / 3 != j / 3 || i == j) continue;
      const CoordPoly dg = g.derivative(static_cast<Var>(j));
      if (dg.is_zero()) continue;
      out += df * dg * var_bracket(static_cast<Var>(i), static_cast<Var>(j), ps);
    }
  }
  return out;
}

ResidualReport jacobi_check(const PoissonStructure& ps) {
  const int order = ps.order();
  const CoordPoly am = CoordPoly::variable(Var::am, order);
  const CoordPoly ap = CoordPoly::variable(Var::ap, order);
  const CoordPoly m = CoordPoly::variable(Var::m, order);
  auto br = [&ps](const CoordPoly& f, const CoordPoly& g) { return pl_bracket(f, g, ps); };
  const CoordPoly residual = br(am, br(ap, m)) + br(ap, br(m, am)) + br(m, br(am, ap));
  return {"jacobi", {entry("{a-,{a+,m}} + cyclic", residual)}};
}

ResidualReport poisson_homomorphism_check(const PoissonStructure& ps) {
  const int order = ps.order();
  const auto g = group_compose(symbolic_coords(0, order), symbolic_coords(1, order));
  const std::map<Var, CoordPoly> pullback{{Var::am, g.a_minus}, {Var::ap, g.a_plus}, {Var::m, g.m}};
  const std::array<Var, 3> gens = {Var::am, Var::ap, Var::m};
  ResidualReport report{"poisson homomorphism", {}};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const CoordPoly u = CoordPoly::variable(gens[i], order);
      const CoordPoly v = CoordPoly::variable(gens[j], order);
      const CoordPoly lhs = pl_bracket(u, v, ps).substitute(pullback);
      const CoordPoly rhs = pl_bracket(u.substitute(pullback), v.substitute(pullback), ps);
      report.entries.push_back(entry("{" + std::string(var_name(gens[i])) + "," +
                                         std::string(var_name(gens[j])) + "}",
                                     lhs - rhs));
    }
  }
  return report;
}

ResidualReport linear_part_check(const PoissonStructure& ps, const Cocommutator& delta) {
  const DualBracket dual = dual_bracket(delta);
  const int order = ps.order();
  ResidualReport report{"linear part", {}};
  const std::array<std::array<int, 2>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  for (int b = 0; b < 3; ++b) {
    const auto [i, j] = pairs[b];
    CoordPoly expected(order);
    for (int k = 0; k < 3; ++k) expected += dual[i][j][k] * CoordPoly::variable(coord(0, k), order);
    report.entries.push_back(entry("{" + std::string(var_name(coord(0, i))) + "," +
                                       std::string(var_name(coord(0, j))) + "}",
                                   ps.brackets[b].homogeneous_part(1) - expected));
  }
  return report;
}

CoordPoly chart_change(const CoordPoly& p) {
  const int order = p.order();
  const CoordPoly x1 = CoordPoly::variable(Var::x1, order);
  const CoordPoly x2 = CoordPoly::variable(Var::x2, order);
  const CoordPoly x3 = CoordPoly::variable(Var::x3, order);
  return p.substitute({{Var::am, x1}, {Var::ap, x2}, {Var::m, x3 - x1 * x2}});
}

CoordPoly chart_inverse(const CoordPoly& p) {
  const int order = p.order();
  const CoordPoly am = CoordPoly::variable(Var::am, order);
  const CoordPoly ap = CoordPoly::variable(Var::ap, order);
  const CoordPoly m = CoordPoly::variable(Var::m, order);
  return p.substitute({{Var::x1, am}, {Var::x2, ap}, {Var::x3, m + am * ap}});
}

}  // namespace qhw
