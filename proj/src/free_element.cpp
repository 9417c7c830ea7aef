#include "qhw/free_element.hpp"

#include "qhw/errors.hpp"

#include <algorithm>
#include <tuple>

namespace qhw {

std::string_view gen_name(Gen g) {
  switch (g) {
    case Gen::M: return "M";
    case Gen::APlus: return "A+";
    case Gen::AMinus: return "A-";
  }
  return "?";
}

std::optional<Gen> gen_from_name(std::string_view name) {
  for (Gen g : kGenerators) {
    if (gen_name(g) == name) return g;
  }
  return std::nullopt;
}

bool is_normal_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

bool word_display_less(const Word& lhs, const Word& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs < rhs;
}

std::string render_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += gen_name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

FreeElement FreeElement::one(int order) { return scalar(ParamPoly::constant(Rational(1), order)); }

FreeElement FreeElement::scalar(const ParamPoly& c) { return word(Word{}, c); }

FreeElement FreeElement::generator(Gen g, int order) {
  return word(Word{g}, ParamPoly::constant(Rational(1), order));
}

FreeElement FreeElement::word(const Word& w, const ParamPoly& c) {
  FreeElement out(c.order());
  if (!c.is_zero()) out.terms_.emplace(w, c);
  return out;
}

ParamPoly FreeElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ParamPoly(order_) : it->second;
}

std::optional<int> FreeElement::lowest_degree() const {
  std::optional<int> best;
  for (const auto& [w, c] : terms_) {
    auto d = c.lowest_degree();
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

bool FreeElement::is_normal() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_normal_word(t.first); });
}

void FreeElement::check_order(const FreeElement& other) const {
  if (order_ != other.order_) {
    throw UsageError("mismatched truncation orders: " + std::to_string(order_) + " vs " +
                     std::to_string(other.order_));
  }
}

void FreeElement::add_term(const Word& w, const ParamPoly& c) {
  if (c.order() != order_) throw UsageError("coefficient order differs from element order");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement FreeElement::truncated(int k) const {
  FreeElement out(k);
  for (const auto& [w, c] : terms_) {
    auto t = c.truncated(k);
    if (!t.is_zero()) out.terms_.emplace(w, std::move(t));
  }
  return out;
}

FreeElement FreeElement::homogeneous_part(int d) const {
  FreeElement out(order_);
  for (const auto& [w, c] : terms_) {
    auto t = c.homogeneous_part(d);
    if (!t.is_zero()) out.terms_.emplace(w, std::move(t));
  }
  return out;
}

FreeElement FreeElement::operator-() const {
  FreeElement out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

FreeElement& FreeElement::operator+=(const FreeElement& rhs) {
  check_order(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& rhs) {
  check_order(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

FreeElement& FreeElement::operator*=(const ParamPoly& c) {
  if (c.order() != order_) throw UsageError("scalar order differs from element order");
  TermMap scaled;
  for (auto& [w, coef] : terms_) {
    auto p = c * coef;
    if (!p.is_zero()) scaled.emplace(w, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

FreeElement operator*(const FreeElement& x, const FreeElement& y) {
  x.check_order(y);
  FreeElement out(x.order_);
  for (const auto& [wx, cx] : x.terms_) {
    for (const auto& [wy, cy] : y.terms_) {
      auto c = cx * cy;
      if (c.is_zero()) continue;
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out.add_term(w, c);
    }
  }
  return out;
}

FreeElement nc_mul(const FreeElement& x, const FreeElement& y) { return x * y; }

std::string FreeElement::to_string() const {
  struct Flat {
    Monomial mono;
    const Word* word;
    const Rational* coef;
  };
  std::vector<Flat> flat;
  for (const auto& [w, c] : terms_) {
    for (const auto& t : c.terms()) flat.push_back({t.mono, &w, &t.coef});
  }
  if (flat.empty()) return "0";
  std::sort(flat.begin(), flat.end(), [](const Flat& a, const Flat& b) {
    if (a.mono != b.mono) return graded_lex_less(a.mono, b.mono);
    return word_display_less(*a.word, *b.word);
  });
  std::string out;
  for (const auto& f : flat) {
    out += render_term(*f.coef, join_factors({f.mono.to_string(), render_word(*f.word)}),
                       out.empty());
  }
  return out;
}

FreeElement substitute(const FreeElement& x, const std::map<Param, ParamPoly>& values) {
  FreeElement out(x.order());
  for (const auto& [w, c] : x.terms()) out.add_term(w, substitute(c, values));
  return out;
}

FreeElement substitute_letters(const FreeElement& x, const std::array<FreeElement, 3>& images) {
  const int k = x.order();
  FreeElement out(k);
  for (const auto& [w, c] : x.terms()) {
    FreeElement term = FreeElement::scalar(c);
    for (Gen g : w) term = term * images[static_cast<int>(g)];
    out += term;
  }
  return out;
}

}  // namespace qhw
