#include "qhw/bialgebra.hpp"

#include "qhw/errors.hpp"

#include <algorithm>

namespace qhw {

namespace {

using PolyMatrix = std::array<std::array<ParamPoly, 3>, 3>;

constexpr std::array<Param, 9> kCoefficientSymbols = {Param::a1, Param::a2, Param::a3,
                                                      Param::b1, Param::b2, Param::b3,
                                                      Param::c1, Param::c2, Param::c3};

PolyMatrix zero_matrix(int order) {
  return {{{ParamPoly(order), ParamPoly(order), ParamPoly(order)},
           {ParamPoly(order), ParamPoly(order), ParamPoly(order)},
           {ParamPoly(order), ParamPoly(order), ParamPoly(order)}}};
}

ParamPoly unit(int order) { return ParamPoly::constant(Rational(1), order); }

TensorElement basis_pair(int i, int j, const ParamPoly& c) {
  TensorElement out(2, c.order());
  out.add_term({Word{kBasis[i]}, Word{kBasis[j]}}, c);
  return out;
}

// Components R(i,j) of a rank-2 tensor of single letters.
PolyMatrix components(const TensorElement& t) {
  PolyMatrix out = zero_matrix(t.order());
  for (const auto& [key, c] : t.terms()) {
    if (key[0].size() != 1 || key[1].size() != 1) {
      throw UsageError("tensor does not lie in g(x)g: " + t.to_string());
    }
    out[basis_index(key[0][0])][basis_index(key[1][0])] = c;
  }
  return out;
}

// sum_k c^k_{ij} e_k as a single-letter element scaled by coef.
FreeElement bracket_element(const LieStructure& g, int i, int j, const ParamPoly& coef) {
  FreeElement out(coef.order());
  const auto b = g.bracket(i, j);
  for (int k = 0; k < 3; ++k) {
    if (b[k] != 0) out.add_term(Word{kBasis[k]}, coef * b[k]);
  }
  return out;
}

TensorElement primitive(Gen x, int order) {
  return TensorElement::product(FreeElement::one(order), FreeElement::generator(x, order)) +
         TensorElement::product(FreeElement::generator(x, order), FreeElement::one(order));
}

TensorElement tensor_commutator(const TensorElement& u, const TensorElement& v,
                                const RewriteSystem& rs) {
  return tensor_mul(u, v, rs) - tensor_mul(v, u, rs);
}

std::string basis_label(int i) { return std::string(gen_name(kBasis[i])); }

}  // namespace

int basis_index(Gen g) {
  switch (g) {
    case Gen::AMinus: return 0;
    case Gen::APlus: return 1;
    case Gen::M: return 2;
  }
  return -1;
}

LieStructure LieStructure::heisenberg() {
  LieStructure g;
  for (auto& m : g.constants) m = Matrix3::Zero();
  g.constants[2](0, 1) = 1;
  g.constants[2](1, 0) = -1;
  return g;
}

std::array<Rational, 3> LieStructure::bracket(int i, int j) const {
  return {constants[0](i, j), constants[1](i, j), constants[2](i, j)};
}

bool LieStructure::is_antisymmetric() const {
  return std::all_of(constants.begin(), constants.end(),
                     [](const Matrix3& m) { return m == Matrix3(-m.transpose()); });
}

bool LieStructure::satisfies_jacobi() const {
  // [e_i,[e_j,e_l]] + [e_j,[e_l,e_i]] + [e_l,[e_i,e_j]] = 0.
  auto nested = [this](int i, int j, int l) {
    std::array<Rational, 3> out{};
    const auto inner = bracket(j, l);
    for (int k = 0; k < 3; ++k) {
      if (inner[k] == 0) continue;
      const auto outer = bracket(i, k);
      for (int m = 0; m < 3; ++m) out[m] += inner[k] * outer[m];
    }
    return out;
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int l = 0; l < 3; ++l) {
        const auto x = nested(i, j, l);
        const auto y = nested(j, l, i);
        const auto z = nested(l, i, j);
        for (int m = 0; m < 3; ++m) {
          if (x[m] + y[m] + z[m] != 0) return false;
        }
      }
    }
  }
  return true;
}

RewriteSystem LieStructure::enveloping(int order) const {
  std::map<RewriteSystem::Pair, FreeElement> rels;
  for (Gen g : kGenerators) {
    for (Gen h : kGenerators) {
      if (g <= h) continue;
      rels.emplace(RewriteSystem::Pair{g, h},
                   bracket_element(*this, basis_index(g), basis_index(h), unit(order)));
    }
  }
  return RewriteSystem("U(g)", order, std::move(rels));
}

// --- Cocommutator -------------------------------------------------------

Cocommutator::Cocommutator(int order) : coef(zero_matrix(order)) {}

Cocommutator Cocommutator::symbolic(int order) {
  Cocommutator d(order);
  for (int i = 0; i < 9; ++i) d.coef[i / 3][i % 3] = ParamPoly::symbol(kCoefficientSymbols[i], order);
  return d;
}

Cocommutator Cocommutator::from_values(const std::array<Rational, 9>& values, int order) {
  Cocommutator d(order);
  for (int i = 0; i < 9; ++i) d.coef[i / 3][i % 3] = ParamPoly::constant(values[i], order);
  return d;
}

Cocommutator Cocommutator::with_forced_c(const std::array<ParamPoly, 6>& ab) {
  Cocommutator d(ab[0].order());
  for (int i = 0; i < 6; ++i) d.coef[i / 3][i % 3] = ab[i];
  d.coef[2][1] = ab[3];
  d.coef[2][2] = -ab[0];
  return d;
}

bool Cocommutator::is_zero() const {
  return std::all_of(coef.begin(), coef.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const ParamPoly& p) { return p.is_zero(); });
  });
}

bool Cocommutator::is_constant() const {
  return std::all_of(coef.begin(), coef.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const ParamPoly& p) { return p.is_constant(); });
  });
}

std::array<Rational, 9> Cocommutator::values() const {
  if (!is_constant()) throw UsageError("cocommutator has symbolic coefficients");
  std::array<Rational, 9> out;
  for (int i = 0; i < 9; ++i) out[i] = coef[i / 3][i % 3].constant_term();
  return out;
}

TensorElement Cocommutator::image(Gen x) const {
  const int row = basis_index(x);
  TensorElement out(2, order());
  for (int col = 0; col < 3; ++col) {
    const auto [i, j] = kWedgePairs[col];
    out += basis_pair(i, j, coef[row][col]);
    out -= basis_pair(j, i, coef[row][col]);
  }
  return out;
}

Cocommutator Cocommutator::from_images(const std::array<TensorElement, 3>& images) {
  Cocommutator d(images[0].order());
  for (int row = 0; row < 3; ++row) {
    const PolyMatrix t = components(images[row]);
    for (int i = 0; i < 3; ++i) {
      if (!t[i][i].is_zero()) throw UsageError("cocommutator image is not skew");
      for (int j = i + 1; j < 3; ++j) {
        if (t[i][j] != -t[j][i]) throw UsageError("cocommutator image is not skew");
      }
    }
    for (int col = 0; col < 3; ++col) {
      const auto [i, j] = kWedgePairs[col];
      d.coef[row][col] = t[i][j];
    }
  }
  return d;
}

std::string Cocommutator::to_string() const {
  static constexpr std::array<std::string_view, 3> kRows = {"a", "b", "c"};
  std::string out;
  for (int i = 0; i < 9; ++i) {
    if (i) out += ", ";
    out += std::string(kRows[i / 3]) + std::to_string(i % 3 + 1) + "=" + coef[i / 3][i % 3].to_string();
  }
  return out;
}

RMatrix RMatrix::symbolic(int order) {
  return RMatrix(ParamPoly::symbol(Param::xi, order), ParamPoly::symbol(Param::beta_plus, order),
                 ParamPoly::symbol(Param::beta_minus, order));
}

TensorElement RMatrix::tensor() const {
  const int ap = basis_index(Gen::APlus);
  const int am = basis_index(Gen::AMinus);
  const int m = basis_index(Gen::M);
  return basis_pair(ap, am, xi) - basis_pair(am, ap, xi) + basis_pair(ap, m, beta_plus) -
         basis_pair(m, ap, beta_plus) + basis_pair(am, m, beta_minus) - basis_pair(m, am, beta_minus);
}

// --- cocycle and co-Jacobi ----------------------------------------------

std::vector<CocycleResidual> cocycle_residuals(const Cocommutator& delta, const LieStructure& g) {
  const int k = delta.order();
  const RewriteSystem rs = g.enveloping(k);
  std::vector<CocycleResidual> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Gen x = kBasis[i];
      const Gen y = kBasis[j];
      TensorElement lhs(2, k);
      const auto b = g.bracket(i, j);
      for (int m = 0; m < 3; ++m) {
        if (b[m] != 0) lhs += b[m] * delta.image(kBasis[m]);
      }
      TensorElement residual = lhs - tensor_commutator(delta.image(x), primitive(y, k), rs) -
                               tensor_commutator(primitive(x, k), delta.image(y), rs);
      out.push_back({x, y, std::move(residual)});
    }
  }
  return out;
}

DualBracket dual_bracket(const Cocommutator& delta) {
  const int order = delta.order();
  DualBracket out;
  for (auto& plane : out) plane = zero_matrix(order);
  for (int k = 0; k < 3; ++k) {
    const PolyMatrix f = components(delta.image(kBasis[k]));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) out[i][j][k] = f[i][j];
    }
  }
  return out;
}

std::array<ParamPoly, 3> cojacobi_residuals(const Cocommutator& delta) {
  const int order = delta.order();
  const DualBracket f = dual_bracket(delta);
  using Vec = std::array<ParamPoly, 3>;
  auto bracket = [&](const Vec& u, const Vec& v) {
    Vec out{ParamPoly(order), ParamPoly(order), ParamPoly(order)};
    for (int i = 0; i < 3; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < 3; ++j) {
        if (v[j].is_zero()) continue;
        const ParamPoly uv = u[i] * v[j];
        for (int k = 0; k < 3; ++k) out[k] += uv * f[i][j][k];
      }
    }
    return out;
  };
  auto basis = [&](int i) {
    Vec v{ParamPoly(order), ParamPoly(order), ParamPoly(order)};
    v[i] = unit(order);
    return v;
  };
  const Vec x = basis(0), y = basis(1), z = basis(2);
  const Vec t1 = bracket(x, bracket(y, z));
  const Vec t2 = bracket(y, bracket(z, x));
  const Vec t3 = bracket(z, bracket(x, y));
  return {t1[0] + t2[0] + t3[0], t1[1] + t2[1] + t3[1], t1[2] + t2[2] + t3[2]};
}

ParamPoly monic(const ParamPoly& p) {
  if (p.is_zero()) return p;
  const auto& terms = p.terms();
  const auto lead = std::max_element(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return graded_lex_less(a.mono, b.mono);
  });
  return p * Rational(1 / lead->coef);
}

std::vector<ParamPoly> cocycle_constraints(const Cocommutator& delta, const LieStructure& g) {
  std::vector<ParamPoly> out;
  for (const auto& r : cocycle_residuals(delta, g)) {
    for (const auto& [key, c] : r.residual.terms()) {
      ParamPoly n = monic(c);
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ParamPoly& a, const ParamPoly& b) { return a.to_string() < b.to_string(); });
  return out;
}

// --- automorphisms --------------------------------------------------------

Cocommutator apply_automorphism(const Cocommutator& delta, const Matrix3& p, const LieStructure& g) {
  if (p.determinant() == 0) throw AutomorphismError("basis change is singular");
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      // [e'_i, e'_j] in old coordinates versus sum_k c^k_ij e'_k.
      std::array<Rational, 3> lhs{};
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const Rational s = p(i, a) * p(j, b);
          if (s == 0) continue;
          const auto br = g.bracket(a, b);
          for (int m = 0; m < 3; ++m) lhs[m] += s * br[m];
        }
      }
      const auto target = g.bracket(i, j);
      for (int m = 0; m < 3; ++m) {
        Rational rhs = 0;
        for (int k = 0; k < 3; ++k) rhs += target[k] * p(k, m);
        if (lhs[m] != rhs) {
          throw AutomorphismError("basis change does not preserve the bracket [" + basis_label(i) +
                                  "'," + basis_label(j) + "']");
        }
      }
    }
  }
  const Matrix3 q = p.inverse();
  const int order = delta.order();
  std::array<PolyMatrix, 3> old;
  for (int j = 0; j < 3; ++j) old[j] = components(delta.image(kBasis[j]));
  Cocommutator out(order);
  for (int i = 0; i < 3; ++i) {
    for (int col = 0; col < 3; ++col) {
      const auto [c, d] = kWedgePairs[col];
      ParamPoly sum(order);
      for (int j = 0; j < 3; ++j) {
        if (p(i, j) == 0) continue;
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) {
            const Rational w = p(i, j) * q(a, c) * q(b, d);
            if (w != 0 && !old[j][a][b].is_zero()) sum += old[j][a][b] * w;
          }
        }
      }
      out.coef[i][col] = std::move(sum);
    }
  }
  return out;
}

Matrix3 swap_automorphism() {
  Matrix3 s = Matrix3::Zero();
  s(0, 1) = 1;
  s(1, 0) = 1;
  s(2, 2) = -1;
  return s;
}

std::string describe_automorphism(const Matrix3& p) {
  if (p == Matrix3(Matrix3::Identity())) return "identity";
  std::string out;
  for (int i = 0; i < 3; ++i) {
    Matrix3 id = Matrix3::Identity();
    if (p.row(i) == id.row(i)) continue;
    std::string row;
    for (int j : {1, 0, 2}) {
      if (p(i, j) != 0) row += render_term(p(i, j), basis_label(j), row.empty());
    }
    if (!out.empty()) out += ", ";
    out += basis_label(i) + "' = " + (row.empty() ? "0" : row);
  }
  return out;
}

// --- r-matrices -----------------------------------------------------------

TensorElement triple_wedge(int order) {
  TensorElement out(3, order);
  const std::array<Gen, 3> base = {Gen::M, Gen::APlus, Gen::AMinus};
  std::array<int, 3> perm = {0, 1, 2};
  do {
    int inversions = 0;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) inversions += perm[a] > perm[b];
    }
    out.add_term({Word{base[perm[0]]}, Word{base[perm[1]]}, Word{base[perm[2]]}},
                 ParamPoly::constant(Rational(inversions % 2 ? -1 : 1), order));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TensorElement schouten(const RMatrix& r, const LieStructure& g) {
  const int order = r.xi.order();
  const PolyMatrix rc = components(r.tensor());
  TensorElement out(3, order);
  auto add = [&](int s0, int s1, int s2, const ParamPoly& c) {
    out.add_term({Word{kBasis[s0]}, Word{kBasis[s1]}, Word{kBasis[s2]}}, c);
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (rc[i][j].is_zero()) continue;
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          if (rc[k][l].is_zero()) continue;
          const ParamPoly c = rc[i][j] * rc[k][l];
          const auto ik = g.bracket(i, k);
          const auto jk = g.bracket(j, k);
          const auto jl = g.bracket(j, l);
          for (int m = 0; m < 3; ++m) {
            if (ik[m] != 0) add(m, j, l, c * ik[m]);  // [r12, r13]
            if (jk[m] != 0) add(i, m, l, c * jk[m]);  // [r12, r23]
            if (jl[m] != 0) add(i, k, m, c * jl[m]);  // [r13, r23]
          }
        }
      }
    }
  }
  return out;
}

std::optional<ParamPoly> alternating_coefficient(const TensorElement& omega) {
  if (omega.rank() != 3) return std::nullopt;
  for (const auto& [key, c] : omega.terms()) {
    for (const auto& w : key) {
      if (w.size() != 1) return std::nullopt;
    }
  }
  const ParamPoly c = omega.coefficient({Word{Gen::M}, Word{Gen::APlus}, Word{Gen::AMinus}});
  if (omega != c * triple_wedge(omega.order())) return std::nullopt;
  return c;
}

bool mcybe_check(const TensorElement& omega, const LieStructure& g) {
  if (!alternating_coefficient(omega)) {
    throw UsageError("mCYBE check needs an alternating rank-3 tensor");
  }
  for (int x = 0; x < 3; ++x) {
    TensorElement action(3, omega.order());
    for (const auto& [key, c] : omega.terms()) {
      for (int slot = 0; slot < 3; ++slot) {
        const auto b = g.bracket(x, basis_index(key[slot][0]));
        for (int m = 0; m < 3; ++m) {
          if (b[m] == 0) continue;
          TensorElement::Key moved = key;
          moved[slot] = Word{kBasis[m]};
          action.add_term(moved, c * b[m]);
        }
      }
    }
    if (!action.is_zero()) return false;
  }
  return true;
}

Cocommutator coboundary_delta(const RMatrix& r, const LieStructure& g) {
  const int order = r.xi.order();
  const PolyMatrix rc = components(r.tensor());
  std::array<TensorElement, 3> images{TensorElement(2, order), TensorElement(2, order),
                                      TensorElement(2, order)};
  for (int x = 0; x < 3; ++x) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (rc[i][j].is_zero()) continue;
        const auto xi = g.bracket(x, i);
        const auto xj = g.bracket(x, j);
        for (int m = 0; m < 3; ++m) {
          if (xi[m] != 0) images[x] += basis_pair(m, j, rc[i][j] * xi[m]);
          if (xj[m] != 0) images[x] += basis_pair(i, m, rc[i][j] * xj[m]);
        }
      }
    }
  }
  return Cocommutator::from_images(images);
}

std::optional<RMatrixSolution> find_rmatrix(const Cocommutator& delta) {
  const auto target = delta.values();
  const int order = delta.order();
  Eigen::Matrix<Rational, 9, 3> a;
  for (int col = 0; col < 3; ++col) {
    RMatrix unit_r(order);
    ParamPoly one = unit(order);
    (col == 0 ? unit_r.xi : col == 1 ? unit_r.beta_plus : unit_r.beta_minus) = one;
    const auto v = coboundary_delta(unit_r).values();
    for (int i = 0; i < 9; ++i) a(i, col) = v[i];
  }
  Eigen::Matrix<Rational, 9, 1> b;
  for (int i = 0; i < 9; ++i) b(i) = target[i];

  const Eigen::FullPivLU<Eigen::Matrix<Rational, 9, 3>> lu(a);
  const Eigen::Matrix<Rational, 3, 1> x = lu.solve(b);
  if (a * x != b) return std::nullopt;

  auto to_rmatrix = [order](const auto& v) {
    return RMatrix(ParamPoly::constant(v(0), order), ParamPoly::constant(v(1), order),
                   ParamPoly::constant(v(2), order));
  };
  RMatrixSolution sol{to_rmatrix(x), {}};
  if (lu.rank() < 3) {
    const auto kernel = lu.kernel();
    for (Eigen::Index c = 0; c < kernel.cols(); ++c) sol.gauge.push_back(to_rmatrix(kernel.col(c)));
  }
  return sol;
}

// --- classification -------------------------------------------------------

std::string_view type_name(BialgebraType t) {
  switch (t) {
    case BialgebraType::Trivial: return "TRIVIAL";
    case BialgebraType::TypeIPlus: return "TYPE_I_PLUS";
    case BialgebraType::TypeIMinus: return "TYPE_I_MINUS";
    case BialgebraType::TypeII: return "TYPE_II";
    case BialgebraType::Invalid: return "INVALID";
  }
  return "?";
}

bool is_type_i_plus(const Cocommutator& delta) {
  const auto v = delta.values();
  const Rational &a1 = v[0], &a2 = v[1], &a3 = v[2], &b1 = v[3], &b2 = v[4], &b3 = v[5];
  if (a1 == 0) return false;
  return b2 == -a3 * b1 * b1 / (a1 * a1) && b3 == a2 + 2 * b1 * a3 / a1;
}

bool is_type_i_minus(const Cocommutator& delta) {
  const auto v = delta.values();
  return v[0] == 0 && v[3] != 0 && v[2] == 0 && v[1] == v[5];
}

bool is_type_ii(const Cocommutator& delta) {
  const auto v = delta.values();
  return v[0] == 0 && v[3] == 0;
}

BialgebraClass classify(const Cocommutator& delta) {
  if (!delta.is_constant()) throw UsageError("classify needs rational coefficients");
  BialgebraClass cls;
  cls.original = delta;
  cls.normalized = delta;
  for (auto& r : cocycle_residuals(delta)) {
    if (!r.residual.is_zero()) cls.cocycle.push_back(std::move(r));
  }
  cls.cojacobi = cojacobi_residuals(delta);
  const bool cojacobi_ok = std::all_of(cls.cojacobi.begin(), cls.cojacobi.end(),
                                       [](const ParamPoly& p) { return p.is_zero(); });
  if (!cls.cocycle.empty() || !cojacobi_ok) {
    cls.type = BialgebraType::Invalid;
    return cls;
  }

  const auto v = delta.values();
  const Rational &a1 = v[0], &a2 = v[1], &a3 = v[2], &b1 = v[3], &b3 = v[5];
  if (delta.is_zero()) {
    cls.type = BialgebraType::Trivial;
  } else if (a1 != 0) {
    cls.type = BialgebraType::TypeIPlus;
    cls.automorphism(1, 0) = -b1 / a1;
    cls.automorphism(1, 2) = b1 * a3 / (a1 * a1) + a2 / a1;
  } else if (b1 != 0) {
    cls.type = BialgebraType::TypeIMinus;
    cls.automorphism(0, 2) = -b3 / b1;
  } else {
    cls.type = BialgebraType::TypeII;
  }
  cls.normalized = apply_automorphism(delta, cls.automorphism);
  cls.rmatrix = find_rmatrix(delta);
  cls.coboundary = cls.rmatrix.has_value();
  return cls;
}

}  // namespace qhw
