#pragma once

#include "qhw/free_element.hpp"
#include "qhw/rewrite.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qhw {

/// Linear combination of word tuples (rank 2 or 3) with parameter-polynomial
/// coefficients. Products act slot by slot.
class TensorElement {
 public:
  using Key = std::vector<Word>;
  using TermMap = std::map<Key, ParamPoly>;

  TensorElement(int rank, int order = kDefaultOrder);
  /// x (x) y.
  static TensorElement product(const FreeElement& x, const FreeElement& y);
  /// x (x) y (x) z.
  static TensorElement product(const FreeElement& x, const FreeElement& y, const FreeElement& z);

  int rank() const { return rank_; }
  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coefficient(const Key& k) const;
  std::optional<int> lowest_degree() const;

  void add_term(const Key& k, const ParamPoly& c);

  TensorElement truncated(int k) const;
  TensorElement homogeneous_part(int d) const;

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  TensorElement& operator*=(const ParamPoly& c);
  TensorElement& operator*=(const Rational& c);

  friend TensorElement operator+(TensorElement lhs, const TensorElement& rhs) { return lhs += rhs; }
  friend TensorElement operator-(TensorElement lhs, const TensorElement& rhs) { return lhs -= rhs; }
  friend TensorElement operator*(const ParamPoly& c, TensorElement u) { return u *= c; }
  friend TensorElement operator*(const Rational& c, TensorElement u) { return u *= c; }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  /// "1 (x) A- + A- (x) 1 + a1*A- (x) A+"; an empty slot renders as 1 unless a
  /// scalar already stands in front of it.
  std::string to_string() const;

 private:
  void check_compatible(const TensorElement& other) const;

  int rank_;
  int order_;
  TermMap terms_;
};

/// Slotwise product, each slot brought to normal form.
TensorElement tensor_mul(const TensorElement& u, const TensorElement& v, const RewriteSystem& rs);

/// Normal-orders every slot.
TensorElement normal_form(const TensorElement& u, const RewriteSystem& rs);

/// Swaps the two slots of a rank-2 tensor.
TensorElement flip(const TensorElement& u);

/// Replaces the word in `slot` by a rank-2 tensor, producing a rank-3 tensor.
TensorElement expand_slot(const TensorElement& u, int slot,
                          const std::function<TensorElement(const Word&)>& f);

/// Applies a linear functional to one slot of a rank-2 tensor.
FreeElement contract_slot(const TensorElement& u, int slot,
                          const std::function<ParamPoly(const Word&)>& f);

}  // namespace qhw
