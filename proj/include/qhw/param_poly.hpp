#pragma once

#include "qhw/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qhw {

/// Deformation parameters. The order fixes the graded-lex tie-break used when
/// rendering (a1 is the most significant variable).
enum class Param : std::uint8_t {
  a1, a2, a3, b1, b2, b3, c1, c2, c3, xi, beta_plus, beta_minus, lambda
};

inline constexpr int kParamCount = 13;
inline constexpr int kDefaultOrder = 6;
/// Exponents are packed four bits per parameter, so total degree must stay
/// below 16.
inline constexpr int kMaxOrder = 15;

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

/// A monomial in the parameters, packed into one machine word.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial of(Param p, int exponent = 1);

  int exponent(Param p) const {
    return static_cast<int>((bits_ >> shift(p)) & 0xF);
  }
  int degree() const;
  bool is_one() const { return bits_ == 0; }
  std::uint64_t key() const { return bits_; }

  /// Caller guarantees degree() + other.degree() <= kMaxOrder.
  Monomial operator*(Monomial other) const { return Monomial(bits_ + other.bits_); }

  friend auto operator<=>(Monomial, Monomial) = default;

  std::string to_string() const;

 private:
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  static constexpr int shift(Param p) {
    return 4 * (kParamCount - 1 - static_cast<int>(p));
  }
  std::uint64_t bits_ = 0;
};

/// Display order: total degree ascending, then lexicographic with higher
/// powers of earlier parameters first.
bool graded_lex_less(Monomial lhs, Monomial rhs);

/// Exact-rational polynomial in the parameters, truncated at total degree
/// `order`. Terms are kept sorted by packed monomial with no zero
/// coefficients.
class ParamPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit ParamPoly(int order = kDefaultOrder);
  static ParamPoly constant(const Rational& c, int order = kDefaultOrder);
  static ParamPoly symbol(Param p, int order = kDefaultOrder);
  static ParamPoly monomial(Monomial m, const Rational& c, int order = kDefaultOrder);

  int order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Coefficient of an exact monomial (zero when absent).
  Rational coefficient(Monomial m) const;
  /// Lowest total degree among the terms; nullopt for zero.
  std::optional<int> lowest_degree() const;
  std::optional<int> highest_degree() const;

  /// Drops every term above degree k and lowers the order to k.
  ParamPoly truncated(int k) const;
  /// Homogeneous part of degree d (order unchanged).
  ParamPoly homogeneous_part(int d) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  ParamPoly& operator*=(const Rational& c);

  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
  friend ParamPoly operator*(ParamPoly lhs, const Rational& c) { return lhs *= c; }
  friend ParamPoly operator*(const Rational& c, ParamPoly rhs) { return rhs *= c; }
  friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs);

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  /// Canonical rendering, e.g. "1 - (1/2)*a1^2 + a2*b3".
  std::string to_string() const;

 private:
  void check_same_order(const ParamPoly& other, const char* op) const;
  void add_scaled(const ParamPoly& rhs, int sign);

  int order_;
  std::vector<Term> terms_;
};

/// Truncated product; throws UsageError when the orders differ.
ParamPoly poly_mul(const ParamPoly& p, const ParamPoly& q);

/// Replaces each listed parameter by a polynomial. Degree-raising or
/// degree-preserving substitutions commute with truncation; substituting
/// constants is only meaningful for display.
ParamPoly substitute(const ParamPoly& p, const std::map<Param, ParamPoly>& values);

/// Renders one signed term of a sum: `body` is the non-scalar part already
/// joined (may be empty). The first term carries a bare leading "-", later
/// ones " + " or " - ".
std::string render_term(const Rational& coef, std::string_view body, bool first);

/// Joins non-empty pieces with '*'.
std::string join_factors(const std::vector<std::string>& pieces);

}  // namespace qhw
