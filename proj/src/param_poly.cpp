#include "qhw/param_poly.hpp"

#include "qhw/errors.hpp"

#include <algorithm>

namespace qhw {

namespace {

constexpr std::array<std::string_view, kParamCount> kParamNames = {
    "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3",
    "xi", "beta_plus", "beta_minus", "lambda"};

bool key_less(const ParamPoly::Term& lhs, const ParamPoly::Term& rhs) {
  return lhs.mono.key() < rhs.mono.key();
}

// Sorts by monomial, merges equal monomials and drops zeros.
void canonicalize(std::vector<ParamPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), key_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = std::move(terms[i].coef);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      sum += terms[j].coef;
      ++j;
    }
    if (sum != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coef = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

std::string_view param_name(Param p) { return kParamNames[static_cast<int>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (int i = 0; i < kParamCount; ++i) {
    if (kParamNames[i] == name) return static_cast<Param>(i);
  }
  return std::nullopt;
}

Monomial Monomial::of(Param p, int exponent) {
  if (exponent < 0 || exponent > kMaxOrder) {
    throw UsageError("parameter exponent out of range");
  }
  return Monomial(static_cast<std::uint64_t>(exponent) << shift(p));
}

int Monomial::degree() const {
  // Sum the nibbles: fold to bytes, then add all bytes with one multiply.
  std::uint64_t x = (bits_ & 0x0F0F0F0F0F0F0F0FULL) + ((bits_ >> 4) & 0x0F0F0F0F0F0F0F0FULL);
  return static_cast<int>((x * 0x0101010101010101ULL) >> 56);
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kParamCount; ++i) {
    const auto p = static_cast<Param>(i);
    const int e = exponent(p);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += param_name(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool graded_lex_less(Monomial lhs, Monomial rhs) {
  const int dl = lhs.degree();
  const int dr = rhs.degree();
  if (dl != dr) return dl < dr;
  return lhs.key() > rhs.key();
}

ParamPoly::ParamPoly(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw UsageError("truncation order must lie in [0, " + std::to_string(kMaxOrder) + "]");
  }
}

ParamPoly ParamPoly::constant(const Rational& c, int order) {
  return monomial(Monomial{}, c, order);
}

ParamPoly ParamPoly::symbol(Param p, int order) {
  return monomial(Monomial::of(p), Rational(1), order);
}

ParamPoly ParamPoly::monomial(Monomial m, const Rational& c, int order) {
  ParamPoly out(order);
  if (c != 0 && m.degree() <= order) out.terms_.push_back({m, c});
  return out;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational ParamPoly::constant_term() const { return coefficient(Monomial{}); }

Rational ParamPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, Rational(0)}, key_less);
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Rational(0);
}

std::optional<int> ParamPoly::lowest_degree() const {
  std::optional<int> best;
  for (const auto& t : terms_) {
    const int d = t.mono.degree();
    if (!best || d < *best) best = d;
  }
  return best;
}

std::optional<int> ParamPoly::highest_degree() const {
  std::optional<int> best;
  for (const auto& t : terms_) {
    const int d = t.mono.degree();
    if (!best || d > *best) best = d;
  }
  return best;
}

ParamPoly ParamPoly::truncated(int k) const {
  if (k > order_) throw UsageError("cannot raise the truncation order of a polynomial");
  ParamPoly out(k);
  for (const auto& t : terms_) {
    if (t.mono.degree() <= k) out.terms_.push_back(t);
  }
  return out;
}

ParamPoly ParamPoly::homogeneous_part(int d) const {
  ParamPoly out(order_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == d) out.terms_.push_back(t);
  }
  return out;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

void ParamPoly::check_same_order(const ParamPoly& other, const char* op) const {
  if (order_ != other.order_) {
    throw UsageError(std::string("mismatched truncation orders in ") + op + ": " +
                     std::to_string(order_) + " vs " + std::to_string(other.order_));
  }
}

void ParamPoly::add_scaled(const ParamPoly& rhs, int sign) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->mono.key() < b->mono.key())) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono.key() < a->mono.key()) {
      merged.push_back({b->mono, sign > 0 ? b->coef : Rational(-b->coef)});
      ++b;
    } else {
      Rational sum = sign > 0 ? a->coef + b->coef : a->coef - b->coef;
      if (sum != 0) merged.push_back({a->mono, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  check_same_order(rhs, "addition");
  add_scaled(rhs, +1);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  check_same_order(rhs, "subtraction");
  add_scaled(rhs, -1);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
  lhs.check_same_order(rhs, "multiplication");
  const int k = lhs.order_;
  ParamPoly out(k);
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.terms_.reserve(lhs.terms_.size() * rhs.terms_.size());
  std::vector<int> rdeg;
  rdeg.reserve(rhs.terms_.size());
  for (const auto& t : rhs.terms_) rdeg.push_back(t.mono.degree());
  for (const auto& a : lhs.terms_) {
    const int da = a.mono.degree();
    for (std::size_t j = 0; j < rhs.terms_.size(); ++j) {
      if (da + rdeg[j] > k) continue;
      out.terms_.push_back({a.mono * rhs.terms_[j].mono, a.coef * rhs.terms_[j].coef});
    }
  }
  canonicalize(out.terms_);
  return out;
}

ParamPoly poly_mul(const ParamPoly& p, const ParamPoly& q) { return p * q; }

ParamPoly substitute(const ParamPoly& p, const std::map<Param, ParamPoly>& values) {
  const int k = p.order();
  ParamPoly out(k);
  for (const auto& t : p.terms()) {
    ParamPoly term = ParamPoly::constant(t.coef, k);
    Monomial kept;
    for (int i = 0; i < kParamCount; ++i) {
      const auto param = static_cast<Param>(i);
      const int e = t.mono.exponent(param);
      if (e == 0) continue;
      auto it = values.find(param);
      if (it == values.end()) {
        kept = kept * Monomial::of(param, e);
        continue;
      }
      const ParamPoly& v = it->second;
      if (v.order() != k) throw UsageError("substituted value has a different truncation order");
      for (int n = 0; n < e; ++n) term = term * v;
    }
    out += term * ParamPoly::monomial(kept, Rational(1), k);
  }
  return out;
}

std::string join_factors(const std::vector<std::string>& pieces) {
  std::string out;
  for (const auto& piece : pieces) {
    if (piece.empty()) continue;
    if (!out.empty()) out += '*';
    out += piece;
  }
  return out;
}

std::string render_term(const Rational& coef, std::string_view body, bool first) {
  const bool negative = coef < 0;
  const Rational mag = negative ? Rational(-coef) : coef;
  std::string text;
  if (body.empty()) {
    text = to_string(mag);
  } else if (mag == 1) {
    text = body;
  } else if (is_integer(mag)) {
    text = to_string(mag) + "*" + std::string(body);
  } else {
    text = "(" + to_string(mag) + ")*" + std::string(body);
  }
  if (first) return negative ? "-" + text : text;
  return (negative ? " - " : " + ") + text;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const Term* a, const Term* b) { return graded_lex_less(a->mono, b->mono); });
  std::string out;
  for (const Term* t : order) out += render_term(t->coef, t->mono.to_string(), out.empty());
  return out;
}

}  // namespace qhw
