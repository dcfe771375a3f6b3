#pragma once

// Finite sums of c * u^a * t^b * exp(-u/t), with exactly the calculus needed
// to push derivatives in t through the exponential moment
//     integral_0^inf u^a exp(-u/t) du = a! t^(a+1)      (t > 0).

#include <map>
#include <utility>

#include "lahid/exact.hpp"
#include "lahid/series.hpp"

namespace lahid {

/// Finite Laurent polynomial in t: sum of c * t^b with no zero coefficients.
class LaurentPoly {
 public:
  using Terms = std::map<Index, Rational>;

  LaurentPoly() = default;

  void add(Index exponent, const Rational& c);
  Rational coefficient(Index exponent) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly derivative() const;
  LaurentPoly derivative(Index times) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

/// sum of c * u^a * t^b * exp(-u/t). Like terms are merged eagerly and zero
/// coefficients dropped, so equality is structural. The u-exponent a is
/// never negative.
class ExpLaurentExpr {
 public:
  using Key = std::pair<Index, Index>;  // (a, b)
  using Terms = std::map<Key, Rational>;

  ExpLaurentExpr() = default;

  /// exp(-u/t) itself.
  static ExpLaurentExpr exponential();

  /// Throws std::domain_error for a < 0.
  void add_term(const Rational& c, Index u_power, Index t_power);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const ExpLaurentExpr&, const ExpLaurentExpr&) = default;

 private:
  Terms terms_;
};

ExpLaurentExpr expr_add(const ExpLaurentExpr& x, const ExpLaurentExpr& y);

/// d/dt, term by term: c b u^a t^(b-1) + c u^(a+1) t^(b-2).
ExpLaurentExpr expr_diff_t(const ExpLaurentExpr& e);
ExpLaurentExpr expr_diff_t(const ExpLaurentExpr& e, Index times);

/// Multiplies by a polynomial in u.
ExpLaurentExpr expr_mul_poly_u(const ExpLaurentExpr& e, const Polynomial& p);

/// Integrates over u in (0, inf): (c, a, b) -> c a! t^(b+a+1).
LaurentPoly expr_moment_u(const ExpLaurentExpr& e);

/// k-th t-derivative of exp(-u/t) from the Lah closed form
///   sum_{l=0}^{k-1} (-1)^l L(k,k-l) u^(k-l) t^(l-2k) exp(-u/t).
ExpLaurentExpr exp_derivative_lah(Index k);

/// (-1)^m sum_i (-1)^i i! s(m,i) t^(i+1): the moment of
/// u(u+1)...(u+m-1) exp(-u/t).
LaurentPoly stirling_moment_poly(Index m);

/// Both sides of the k-fold differentiated moment identity for given m, and
/// the per-i inner sums sum_{l=0}^{k-1} (-1)^l (i+k-l)! L(k,k-l).
struct CoefficientChain {
  Index m = 0;
  Index k = 0;
  LaurentPoly side_a;  // stirling_moment_poly(m) differentiated k times
  LaurentPoly side_b;  // moment of exp_derivative_lah(k) * rising poly in u
  std::map<Index, Integer> inner_sums;  // i = 0..m
};

/// Requires 1 <= k <= m + 1. Throws std::logic_error if the two sides differ.
CoefficientChain route6_coefficient_chain(Index m, Index k);

}  // namespace lahid
