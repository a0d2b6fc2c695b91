#include "kpopen/rational.hpp"

#include <stdexcept>

namespace kpo {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational: " + text);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  return ratio(Integer(num), d);
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double factorial of n < -1");
  Integer r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Rational rational_pow(const Rational& base, int exponent) {
  Rational r = 1;
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  for (int i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i) r *= b;
  return r;
}

}  // namespace kpo
