#pragma once

// Small hand-rolled generators for property tests. Fixed seeds keep failures
// reproducible; bump kCases locally when hunting for counterexamples.

#include "qhw/free_element.hpp"
#include "qhw/param_poly.hpp"

#include <random>
#include <vector>

namespace gen {

inline constexpr int kCases = 60;

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  qhw::Rational rational(int span = 3) {
    const int den = integer(1, span);
    return qhw::Rational(integer(-span, span)) / den;
  }
  qhw::Rational nonzero_rational(int span = 3) {
    qhw::Rational r;
    while (r == 0) r = rational(span);
    return r;
  }

  qhw::Param param(int last = static_cast<int>(qhw::Param::b3)) {
    return static_cast<qhw::Param>(integer(0, last));
  }

  qhw::Monomial monomial(int max_degree) {
    qhw::Monomial m;
    const int deg = integer(0, max_degree);
    for (int i = 0; i < deg; ++i) m = m * qhw::Monomial::of(param());
    return m;
  }

  qhw::ParamPoly poly(int order, int max_terms = 4, int max_degree = 2) {
    qhw::ParamPoly p(order);
    const int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) p += qhw::ParamPoly::monomial(monomial(max_degree), rational(), order);
    return p;
  }

  qhw::Word word(int max_length) {
    qhw::Word w;
    const int n = integer(0, max_length);
    for (int i = 0; i < n; ++i) w.push_back(static_cast<qhw::Gen>(integer(0, 2)));
    return w;
  }

  qhw::FreeElement element(int order, int max_terms = 3, int max_length = 3) {
    qhw::FreeElement x(order);
    const int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) x.add_term(word(max_length), poly(order, 2, 1));
    return x;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
