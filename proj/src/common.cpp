#include "boxball/common.hpp"

#include <boost/lexical_cast.hpp>

namespace boxball {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const DomainError*>(&e)) throw;
    throw DomainError("not a rational number: '" + s + "'");
  }
}

BigInt floor_div(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  BigInt quo = num / den;
  if (num % den != 0 && num < 0) quo -= 1;
  return quo;
}

BigInt round_nearest(const Rational& q) {
  return floor_div(q + Rational(1, 2));
}

}  // namespace boxball
