#include "lahid/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lahid {

TruncatedSeries::TruncatedSeries(Index order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Rational TruncatedSeries::operator[](Index i) const {
  if (i < 0 || i > order()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::truncated(Index order) const {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  TruncatedSeries out(order);
  for (Index i = 0; i <= order; ++i) out.coeffs_[static_cast<std::size_t>(i)] = (*this)[i];
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const Index order = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (Index i = 0; i <= order; ++i) out[static_cast<std::size_t>(i)] = a[i] + b[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const Index order = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (Index i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (Index j = 0; i + j <= order; ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_pow(const TruncatedSeries& a, Index e) {
  if (e < 0) throw std::invalid_argument("series_pow: negative exponent");
  std::vector<Rational> one(static_cast<std::size_t>(a.order()) + 1);
  one[0] = 1;
  TruncatedSeries acc(std::move(one));
  for (Index i = 0; i < e; ++i) acc = series_mul(acc, a);
  return acc;
}

TruncatedSeries series_log1p(Index order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (Index n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = make_rational(sign_power(n + 1), n);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_binomial_power(const Integer& e, Index order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (Index i = 0; i <= order; ++i) c[static_cast<std::size_t>(i)] = Rational(binomial_general(e, i));
  return TruncatedSeries(std::move(c));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::linear(const Rational& c) { return Polynomial({c, Rational(1)}); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Rational Polynomial::operator[](Index i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  const Index deg = std::max(a.degree(), b.degree());
  std::vector<Rational> out(static_cast<std::size_t>(deg + 1));
  for (Index i = 0; i <= deg; ++i) out[static_cast<std::size_t>(i)] = a[i] + b[i];
  return Polynomial(std::move(out));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(a.degree() + b.degree() + 1));
  for (Index i = 0; i <= a.degree(); ++i)
    for (Index j = 0; j <= b.degree(); ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  return Polynomial(std::move(out));
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial rising_factorial_poly(Index n) {
  if (n < 0) throw std::invalid_argument("rising_factorial_poly: negative n");
  Polynomial acc = Polynomial::constant(1);
  for (Index j = 0; j < n; ++j) acc = poly_mul(acc, Polynomial::linear(j));
  return acc;
}

Polynomial falling_factorial_poly(Index n) {
  if (n < 0) throw std::invalid_argument("falling_factorial_poly: negative n");
  Polynomial acc = Polynomial::constant(1);
  for (Index j = 0; j < n; ++j) acc = poly_mul(acc, Polynomial::linear(-j));
  return acc;
}

}  // namespace lahid
