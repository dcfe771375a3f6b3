#pragma once

#include <span>
#include <vector>

#include "lahid/exact.hpp"

namespace lahid {

/// Power series in one variable, truncated after t^order.
///
/// The coefficient vector always has exactly order + 1 entries. Binary
/// operations between series of different orders truncate to the smaller one.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(Index order);
  /// Order is coeffs.size() - 1; an empty vector is rejected.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  Index order() const { return static_cast<Index>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Coefficient of t^i; zero beyond the order or for negative i.
  Rational operator[](Index i) const;

  TruncatedSeries truncated(Index order) const;
  TruncatedSeries scaled(const Rational& c) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// a^e for e >= 0, at a's order.
TruncatedSeries series_pow(const TruncatedSeries& a, Index e);

/// ln(1+t) = t - t^2/2 + t^3/3 - ...
TruncatedSeries series_log1p(Index order);

/// (1+x)^e for any integer e; the coefficient of x^i is C(e, i).
TruncatedSeries series_binomial_power(const Integer& e, Index order);

/// Dense polynomial with trailing zeros trimmed; the zero polynomial is empty
/// and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  /// x + c
  static Polynomial linear(const Rational& c);
  static Polynomial constant(const Rational& c);

  Index degree() const { return static_cast<Index>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational operator[](Index i) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Rational poly_eval(const Polynomial& p, const Rational& x);

/// x(x+1)...(x+n-1) expanded in the monomial basis.
Polynomial rising_factorial_poly(Index n);
/// x(x-1)...(x-n+1) expanded in the monomial basis.
Polynomial falling_factorial_poly(Index n);

}  // namespace lahid
