#pragma once

#include "qhw/free_element.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qhw {

/// Commutation relations [g, h] = rhs for the three out-of-order pairs
/// (A+,M), (A-,M), (A-,A+), read as rewrite rules g*h -> h*g + rhs towards the
/// PBW order M < A+ < A-.
///
/// Construction validates the termination witness (every term of rhs is
/// either a shorter word or carries positive parameter degree) and the
/// overlap test on all length-3 words at the system's truncation order.
class RewriteSystem {
 public:
  using Pair = std::pair<Gen, Gen>;

  RewriteSystem(std::string name, int order, std::map<Pair, FreeElement> commutators);

  /// [A-,A+] = M, M central.
  static RewriteSystem undeformed(int order = kDefaultOrder);

  const std::string& name() const { return name_; }
  int order() const { return order_; }

  /// [g, h] for g > h.
  const FreeElement& commutator_rhs(Gen g, Gen h) const;
  /// Normal form of the two-letter word g*h (g > h).
  FreeElement rule(Gen g, Gen h) const;

  /// Normal form of a single word, keeping only parameter degree <= budget.
  FreeElement normal_form_word(const Word& w, int budget) const;

 private:
  struct Cache;

  std::string name_;
  int order_;
  std::map<Pair, FreeElement> commutators_;
  std::shared_ptr<Cache> cache_;
};

FreeElement normal_form(const FreeElement& x, const RewriteSystem& rs);

/// Normal form of x*y - y*x.
FreeElement commutator(const FreeElement& x, const FreeElement& y, const RewriteSystem& rs);

/// Normal form of x*y.
FreeElement multiply(const FreeElement& x, const FreeElement& y, const RewriteSystem& rs);

/// One rewrite step at position pos (requires w[pos] > w[pos+1]).
FreeElement rewrite_at(const Word& w, std::size_t pos, const RewriteSystem& rs);

/// Words of length 3 whose two reduction routes disagree at the system order.
std::vector<Word> confluence_defects(const RewriteSystem& rs);

}  // namespace qhw
