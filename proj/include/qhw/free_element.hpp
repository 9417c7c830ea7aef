#pragma once

#include "qhw/param_poly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qhw {

/// Generators in PBW order: M < A+ < A-.
enum class Gen : std::uint8_t { M = 0, APlus = 1, AMinus = 2 };

inline constexpr std::array<Gen, 3> kGenerators = {Gen::M, Gen::APlus, Gen::AMinus};

std::string_view gen_name(Gen g);
std::optional<Gen> gen_from_name(std::string_view name);

using Word = std::vector<Gen>;

/// True when the letters are non-decreasing in the PBW order.
bool is_normal_word(const Word& w);
/// Display order: shorter words first, then lexicographic.
bool word_display_less(const Word& lhs, const Word& rhs);
/// "M^2*A+*A-"; the empty word renders as "".
std::string render_word(const Word& w);

/// Finite combination of noncommutative words with parameter-polynomial
/// coefficients, all at one truncation order.
class FreeElement {
 public:
  using TermMap = std::map<Word, ParamPoly>;

  explicit FreeElement(int order = kDefaultOrder) : order_(order) {}
  static FreeElement one(int order = kDefaultOrder);
  static FreeElement scalar(const ParamPoly& c);
  static FreeElement generator(Gen g, int order = kDefaultOrder);
  static FreeElement word(const Word& w, const ParamPoly& c);

  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coefficient(const Word& w) const;
  std::optional<int> lowest_degree() const;
  bool is_normal() const;

  void add_term(const Word& w, const ParamPoly& c);

  FreeElement truncated(int k) const;
  FreeElement homogeneous_part(int d) const;

  FreeElement operator-() const;
  FreeElement& operator+=(const FreeElement& rhs);
  FreeElement& operator-=(const FreeElement& rhs);
  FreeElement& operator*=(const Rational& c);
  FreeElement& operator*=(const ParamPoly& c);

  friend FreeElement operator+(FreeElement lhs, const FreeElement& rhs) { return lhs += rhs; }
  friend FreeElement operator-(FreeElement lhs, const FreeElement& rhs) { return lhs -= rhs; }
  friend FreeElement operator*(FreeElement x, const Rational& c) { return x *= c; }
  friend FreeElement operator*(const Rational& c, FreeElement x) { return x *= c; }
  friend FreeElement operator*(const ParamPoly& c, FreeElement x) { return x *= c; }
  /// Word concatenation (free-algebra product, not normal-ordered).
  friend FreeElement operator*(const FreeElement& x, const FreeElement& y);

  friend bool operator==(const FreeElement&, const FreeElement&) = default;

  /// Canonical text, e.g. "1 + a1*A+ + (1/2)*a1^2*A+^2".
  std::string to_string() const;

 private:
  void check_order(const FreeElement& other) const;

  int order_;
  TermMap terms_;
};

FreeElement nc_mul(const FreeElement& x, const FreeElement& y);

FreeElement substitute(const FreeElement& x, const std::map<Param, ParamPoly>& values);

/// Algebra homomorphism of the free algebra fixed by the images of the three
/// generators (indexed by Gen).
FreeElement substitute_letters(const FreeElement& x, const std::array<FreeElement, 3>& images);

}  // namespace qhw
