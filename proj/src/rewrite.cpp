#include "qhw/rewrite.hpp"

#include "qhw/errors.hpp"

#include <mutex>

namespace qhw {

struct RewriteSystem::Cache {
  std::mutex mutex;
  std::map<std::pair<Word, int>, FreeElement> words;
};

namespace {

std::string pair_label(Gen g, Gen h) {
  return "[" + std::string(gen_name(g)) + "," + std::string(gen_name(h)) + "]";
}

// Keeps only the terms of parameter degree <= budget.
FreeElement cap_degree(const FreeElement& x, int budget) {
  FreeElement out(x.order());
  for (const auto& [w, c] : x.terms()) {
    ParamPoly kept(c.order());
    for (const auto& t : c.terms()) {
      if (t.mono.degree() <= budget) kept += ParamPoly::monomial(t.mono, t.coef, c.order());
    }
    out.add_term(w, kept);
  }
  return out;
}

}  // namespace

RewriteSystem::RewriteSystem(std::string name, int order, std::map<Pair, FreeElement> commutators)
    : name_(std::move(name)),
      order_(order),
      commutators_(std::move(commutators)),
      cache_(std::make_shared<Cache>()) {
  for (Gen g : kGenerators) {
    for (Gen h : kGenerators) {
      if (g <= h) continue;
      auto it = commutators_.find({g, h});
      if (it == commutators_.end()) {
        throw ConfigurationError("missing relation " + pair_label(g, h) + " in " + name_);
      }
      const FreeElement& rhs = it->second;
      if (rhs.order() != order_) {
        throw ConfigurationError("relation " + pair_label(g, h) + " has the wrong order");
      }
      for (const auto& [w, c] : rhs.terms()) {
        if (!is_normal_word(w)) {
          throw ConfigurationError("relation " + pair_label(g, h) +
                                   " has a non-normal word " + render_word(w));
        }
        const bool shorter = w.size() < 2;
        const bool deformed = c.lowest_degree().value_or(0) >= 1;
        if (!shorter && !deformed) {
          throw ConfigurationError("relation " + pair_label(g, h) +
                                   " violates the termination witness at " + render_word(w));
        }
      }
    }
  }
  if (auto bad = confluence_defects(*this); !bad.empty()) {
    throw ConfigurationError("rewrite system " + name_ + " is not confluent on " +
                             render_word(bad.front()));
  }
}

RewriteSystem RewriteSystem::undeformed(int order) {
  FreeElement zero(order);
  return RewriteSystem("undeformed", order,
                       {{{Gen::APlus, Gen::M}, zero},
                        {{Gen::AMinus, Gen::M}, zero},
                        {{Gen::AMinus, Gen::APlus}, FreeElement::generator(Gen::M, order)}});
}

const FreeElement& RewriteSystem::commutator_rhs(Gen g, Gen h) const {
  auto it = commutators_.find({g, h});
  if (it == commutators_.end()) throw UsageError("no relation for " + pair_label(g, h));
  return it->second;
}

FreeElement RewriteSystem::rule(Gen g, Gen h) const {
  return FreeElement::word({h, g}, ParamPoly::constant(Rational(1), order_)) +
         commutator_rhs(g, h);
}

FreeElement RewriteSystem::normal_form_word(const Word& w, int budget) const {
  if (budget < 0) return FreeElement(order_);
  std::size_t pos = 0;
  while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
  if (pos + 1 >= w.size()) return FreeElement::word(w, ParamPoly::constant(Rational(1), order_));

  const auto key = std::make_pair(w, budget);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->words.find(key); it != cache_->words.end()) return it->second;
  }

  FreeElement result(order_);
  const FreeElement step = rewrite_at(w, pos, *this);
  for (const auto& [u, c] : step.terms()) {
    const int d = c.lowest_degree().value_or(0);
    if (d > budget) continue;
    result += c * normal_form_word(u, budget - d);
  }
  result = cap_degree(result, budget);

  std::lock_guard lock(cache_->mutex);
  cache_->words.emplace(key, result);
  return result;
}

FreeElement normal_form(const FreeElement& x, const RewriteSystem& rs) {
  if (x.order() != rs.order()) throw UsageError("element and rewrite system orders differ");
  FreeElement out(x.order());
  for (const auto& [w, c] : x.terms()) {
    const int d = c.lowest_degree().value_or(0);
    out += c * rs.normal_form_word(w, rs.order() - d);
  }
  return out;
}

FreeElement commutator(const FreeElement& x, const FreeElement& y, const RewriteSystem& rs) {
  return normal_form(x * y - y * x, rs);
}

FreeElement multiply(const FreeElement& x, const FreeElement& y, const RewriteSystem& rs) {
  return normal_form(x * y, rs);
}

FreeElement rewrite_at(const Word& w, std::size_t pos, const RewriteSystem& rs) {
  if (pos + 1 >= w.size() || w[pos] <= w[pos + 1]) {
    throw UsageError("no rewrite applies at position " + std::to_string(pos) + " of " +
                     render_word(w));
  }
  const FreeElement prefix =
      FreeElement::word(Word(w.begin(), w.begin() + pos), ParamPoly::constant(Rational(1), rs.order()));
  const FreeElement suffix = FreeElement::word(Word(w.begin() + pos + 2, w.end()),
                                               ParamPoly::constant(Rational(1), rs.order()));
  return prefix * rs.rule(w[pos], w[pos + 1]) * suffix;
}

std::vector<Word> confluence_defects(const RewriteSystem& rs) {
  std::vector<Word> bad;
  for (Gen a : kGenerators) {
    for (Gen b : kGenerators) {
      for (Gen c : kGenerators) {
        Word w{a, b, c};
        if (!(a > b && b > c)) continue;
        // Both adjacent pairs are reducible only on strictly descending words.
        const FreeElement left = normal_form(rewrite_at(w, 0, rs), rs);
        const FreeElement right = normal_form(rewrite_at(w, 1, rs), rs);
        if (left != right) bad.push_back(w);
      }
    }
  }
  return bad;
}

}  // namespace qhw
