#include "lahid/exact.hpp"

#include <stdexcept>

namespace lahid {

Integer factorial(Index m) {
  if (m < 0) throw std::domain_error("factorial: negative argument " + std::to_string(m));
  Integer acc = 1;
  for (Index j = 2; j <= m; ++j) acc *= j;
  return acc;
}

Integer binomial_general(const Integer& r, Index j) {
  if (j < 0) return 0;
  // Nonnegative r below j: the product passes through zero.
  if (r >= 0 && r < j) return 0;
  Integer num = 1;
  for (Index i = 0; i < j; ++i) num *= (r - i);
  return num / factorial(j);
}

Integer binomial_general(Index r, Index j) { return binomial_general(Integer(r), j); }

Rational rising(const Rational& x, Index n) {
  if (n < 0) throw std::domain_error("rising: negative length");
  Rational acc = 1;
  for (Index i = 0; i < n; ++i) acc *= (x + i);
  return acc;
}

Rational falling(const Rational& x, Index n) {
  if (n < 0) throw std::domain_error("falling: negative length");
  Rational acc = 1;
  for (Index i = 0; i < n; ++i) acc *= (x - i);
  return acc;
}

Rational reciprocal_factorial_weight(Index m) {
  if (m < 0) return 0;
  return make_rational(1, factorial(m));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num, den);
}

Integer to_integer(const Rational& r) {
  if (denominator(r) != 1) throw std::logic_error("expected an integer, got " + to_string(r));
  return numerator(r);
}

std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace lahid
