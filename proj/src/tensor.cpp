#include "qhw/tensor.hpp"

#include "qhw/errors.hpp"

#include <algorithm>

namespace qhw {

TensorElement::TensorElement(int rank, int order) : rank_(rank), order_(order) {
  if (rank != 2 && rank != 3) throw UsageError("tensor rank must be 2 or 3");
}

TensorElement TensorElement::product(const FreeElement& x, const FreeElement& y) {
  if (x.order() != y.order()) throw UsageError("mismatched truncation orders in tensor product");
  TensorElement out(2, x.order());
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) out.add_term({wx, wy}, cx * cy);
  }
  return out;
}

TensorElement TensorElement::product(const FreeElement& x, const FreeElement& y,
                                     const FreeElement& z) {
  if (x.order() != y.order() || y.order() != z.order()) {
    throw UsageError("mismatched truncation orders in tensor product");
  }
  TensorElement out(3, x.order());
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      const auto cxy = cx * cy;
      if (cxy.is_zero()) continue;
      for (const auto& [wz, cz] : z.terms()) out.add_term({wx, wy, wz}, cxy * cz);
    }
  }
  return out;
}

ParamPoly TensorElement::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? ParamPoly(order_) : it->second;
}

std::optional<int> TensorElement::lowest_degree() const {
  std::optional<int> best;
  for (const auto& [k, c] : terms_) {
    auto d = c.lowest_degree();
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

void TensorElement::add_term(const Key& k, const ParamPoly& c) {
  if (static_cast<int>(k.size()) != rank_) throw UsageError("tensor key has the wrong rank");
  if (c.order() != order_) throw UsageError("coefficient order differs from tensor order");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::truncated(int k) const {
  TensorElement out(rank_, k);
  for (const auto& [key, c] : terms_) out.add_term(key, c.truncated(k));
  return out;
}

TensorElement TensorElement::homogeneous_part(int d) const {
  TensorElement out(rank_, order_);
  for (const auto& [key, c] : terms_) out.add_term(key, c.homogeneous_part(d));
  return out;
}

TensorElement TensorElement::operator-() const {
  TensorElement out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

void TensorElement::check_compatible(const TensorElement& other) const {
  if (rank_ != other.rank_) throw UsageError("tensor rank mismatch");
  if (order_ != other.order_) throw UsageError("mismatched truncation orders");
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  check_compatible(rhs);
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  check_compatible(rhs);
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const ParamPoly& c) {
  TermMap scaled;
  for (auto& [k, coef] : terms_) {
    auto p = c * coef;
    if (!p.is_zero()) scaled.emplace(k, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coef] : terms_) coef *= c;
  return *this;
}

std::string TensorElement::to_string() const {
  struct Flat {
    Monomial mono;
    const Key* key;
    const Rational* coef;
  };
  std::vector<Flat> flat;
  for (const auto& [k, c] : terms_) {
    for (const auto& t : c.terms()) flat.push_back({t.mono, &k, &t.coef});
  }
  if (flat.empty()) return "0";
  std::sort(flat.begin(), flat.end(), [](const Flat& a, const Flat& b) {
    if (a.mono != b.mono) return graded_lex_less(a.mono, b.mono);
    for (std::size_t i = 0; i < a.key->size(); ++i) {
      if ((*a.key)[i] != (*b.key)[i]) return word_display_less((*a.key)[i], (*b.key)[i]);
    }
    return false;
  });
  std::string out;
  for (const auto& f : flat) {
    const Rational mag = *f.coef < 0 ? Rational(-*f.coef) : *f.coef;
    std::string head = join_factors({f.mono.to_string(), render_word(f.key->front())});
    // A bare scalar in front of an empty first slot reads as the scalar itself.
    if (head.empty() && mag == 1) head = "1";
    std::string rest;
    for (std::size_t i = 1; i < f.key->size(); ++i) {
      const auto slot = render_word((*f.key)[i]);
      rest += " (x) " + (slot.empty() ? std::string("1") : slot);
    }
    out += render_term(*f.coef, head, out.empty()) + rest;
  }
  return out;
}

TensorElement tensor_mul(const TensorElement& u, const TensorElement& v, const RewriteSystem& rs) {
  if (u.rank() != v.rank()) throw UsageError("tensor rank mismatch in product");
  if (u.order() != v.order() || u.order() != rs.order()) {
    throw UsageError("mismatched truncation orders in tensor product");
  }
  const int k = rs.order();
  TensorElement out(u.rank(), k);
  const ParamPoly unit = ParamPoly::constant(Rational(1), k);
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      const ParamPoly c = cu * cv;
      if (c.is_zero()) continue;
      const int budget = k - c.lowest_degree().value_or(0);
      // Expand the slotwise normal forms one slot at a time.
      std::vector<std::pair<TensorElement::Key, ParamPoly>> partial{{TensorElement::Key{}, c}};
      for (int s = 0; s < u.rank(); ++s) {
        Word w = ku[s];
        w.insert(w.end(), kv[s].begin(), kv[s].end());
        const FreeElement nf = rs.normal_form_word(w, budget);
        std::vector<std::pair<TensorElement::Key, ParamPoly>> next;
        for (const auto& [key, coef] : partial) {
          for (const auto& [nw, nc] : nf.terms()) {
            ParamPoly prod = coef * nc;
            if (prod.is_zero()) continue;
            TensorElement::Key extended = key;
            extended.push_back(nw);
            next.emplace_back(std::move(extended), std::move(prod));
          }
        }
        partial = std::move(next);
      }
      for (const auto& [key, coef] : partial) out.add_term(key, coef);
    }
  }
  return out;
}

TensorElement normal_form(const TensorElement& u, const RewriteSystem& rs) {
  TensorElement unit(u.rank(), u.order());
  unit.add_term(TensorElement::Key(u.rank()), ParamPoly::constant(Rational(1), u.order()));
  return tensor_mul(u, unit, rs);
}

TensorElement flip(const TensorElement& u) {
  if (u.rank() != 2) throw UsageError("flip requires a rank-2 tensor");
  TensorElement out(2, u.order());
  for (const auto& [k, c] : u.terms()) out.add_term({k[1], k[0]}, c);
  return out;
}

TensorElement expand_slot(const TensorElement& u, int slot,
                          const std::function<TensorElement(const Word&)>& f) {
  if (u.rank() != 2 || slot < 0 || slot > 1) throw UsageError("expand_slot needs rank 2");
  TensorElement out(3, u.order());
  for (const auto& [k, c] : u.terms()) {
    const TensorElement image = f(k[slot]);
    for (const auto& [ik, ic] : image.terms()) {
      TensorElement::Key key = slot == 0 ? TensorElement::Key{ik[0], ik[1], k[1]}
                                         : TensorElement::Key{k[0], ik[0], ik[1]};
      out.add_term(key, c * ic);
    }
  }
  return out;
}

FreeElement contract_slot(const TensorElement& u, int slot,
                          const std::function<ParamPoly(const Word&)>& f) {
  if (u.rank() != 2 || slot < 0 || slot > 1) throw UsageError("contract_slot needs rank 2");
  FreeElement out(u.order());
  for (const auto& [k, c] : u.terms()) {
    const ParamPoly v = f(k[slot]);
    if (v.is_zero()) continue;
    out.add_term(k[1 - slot], c * v);
  }
  return out;
}

}  // namespace qhw
