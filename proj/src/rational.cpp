#include "qhw/rational.hpp"

#include "qhw/errors.hpp"

#include <cctype>

namespace qhw {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num, true)) {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(num_str);
  const auto den = text.substr(slash + 1);
  if (!valid_integer(den, false)) {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  const boost::multiprecision::mpz_int d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(boost::multiprecision::mpz_int(num_str)) / Rational(d);
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace qhw
