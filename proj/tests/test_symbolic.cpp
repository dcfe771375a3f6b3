#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lahid/comb.hpp"
#include "lahid/symbolic.hpp"
#include "oracles.hpp"

using namespace lahid;

namespace {

ExpLaurentExpr expr_of(std::initializer_list<std::tuple<Rational, Index, Index>> terms) {
  ExpLaurentExpr e;
  for (const auto& [c, a, b] : terms) e.add_term(c, a, b);
  return e;
}

LaurentPoly poly_of(std::initializer_list<std::pair<Index, Rational>> terms) {
  LaurentPoly p;
  for (const auto& [b, c] : terms) p.add(b, c);
  return p;
}

}  // namespace

TEST_CASE("expression invariants") {
  ExpLaurentExpr e;
  e.add_term(3, 1, -2);
  e.add_term(-3, 1, -2);
  CHECK(e.is_zero());
  e.add_term(0, 4, 4);
  CHECK(e.is_zero());
  CHECK_THROWS_AS(e.add_term(1, -1, 0), std::domain_error);
  e.add_term(1, 2, 0);
  e.add_term(Rational(1, 2), 2, 0);
  CHECK(e.terms().size() == 1);
  CHECK(e.terms().at({2, 0}) == Rational(3, 2));
}

TEST_CASE("expr_diff_t examples") {
  CHECK(expr_diff_t(ExpLaurentExpr::exponential()) == expr_of({{1, 1, -2}}));
  CHECK(expr_diff_t(ExpLaurentExpr{}).is_zero());
  CHECK(expr_diff_t(ExpLaurentExpr::exponential(), 2) == expr_of({{-2, 1, -3}, {1, 2, -4}}));
}

TEST_CASE("expr_moment_u examples") {
  CHECK(expr_moment_u(expr_of({{1, 2, 0}})) == poly_of({{3, 2}}));
  CHECK(expr_moment_u(ExpLaurentExpr::exponential()) == poly_of({{1, 1}}));
  CHECK(expr_moment_u(expr_of({{1, 1, 0}})) == poly_of({{2, 1}}));
  // Collisions are summed: u t^0 and u^0 t^1 both land on t^2.
  CHECK(expr_moment_u(expr_of({{1, 1, 0}, {5, 0, 1}})) == poly_of({{2, 6}}));
}

TEST_CASE("exp_derivative_lah examples") {
  CHECK(exp_derivative_lah(1) == expr_of({{1, 1, -2}}));
  CHECK(exp_derivative_lah(2) == expr_of({{1, 2, -4}, {-2, 1, -3}}));
  CHECK(exp_derivative_lah(3) == expr_of({{1, 3, -6}, {-6, 2, -5}, {6, 1, -4}}));
  CHECK_THROWS(exp_derivative_lah(0));
}

TEST_CASE("repeated differentiation matches the Lah closed form") {
  ExpLaurentExpr e = ExpLaurentExpr::exponential();
  for (Index k = 1; k <= 12; ++k) {
    e = expr_diff_t(e);
    CHECK_MESSAGE(e == exp_derivative_lah(k), "k=" << k);
  }
}

TEST_CASE("moment commutes with differentiation") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<Index> count(0, 6), a_dist(0, 6), b_dist(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    ExpLaurentExpr e;
    const Index n_terms = count(rng);
    for (Index i = 0; i < n_terms; ++i) e.add_term(oracle::random_rational(rng, 9, 4), a_dist(rng), b_dist(rng));
    CHECK(expr_moment_u(expr_diff_t(e)) == expr_moment_u(e).derivative());
  }
}

TEST_CASE("moment of the rising polynomial in u") {
  for (Index m = 1; m <= 12; ++m) {
    const LaurentPoly lhs = expr_moment_u(expr_mul_poly_u(ExpLaurentExpr::exponential(), rising_factorial_poly(m)));
    LaurentPoly rhs;
    for (Index i = 0; i <= m; ++i) rhs.add(i + 1, Rational(sign_power(m + i) * factorial(i) * stirling1(m, i)));
    CHECK(lhs == rhs);
    CHECK(lhs == stirling_moment_poly(m));
  }
}

TEST_CASE("differentiating the moment polynomial k times") {
  for (Index m = 1; m <= 12; ++m)
    for (Index k = 1; k <= m + 1; ++k) {
      LaurentPoly expected;
      for (Index i = k - 1; i <= m; ++i)
        expected.add(i - k + 1, Rational(sign_power(m + i) * factorial(i) * factorial(i + 1) / factorial(i - k + 1) *
                                         stirling1(m, i)));
      CHECK(stirling_moment_poly(m).derivative(k) == expected);
    }
}

TEST_CASE("coefficient chain examples") {
  const auto c11 = route6_coefficient_chain(1, 1);
  CHECK(c11.side_a == poly_of({{2, 1}}).derivative());
  CHECK(stirling_moment_poly(1) == poly_of({{2, 1}}));

  const auto c21 = route6_coefficient_chain(2, 1);
  CHECK(c21.side_a == c21.side_b);

  const auto c22 = route6_coefficient_chain(2, 2);
  CHECK(c22.inner_sums.at(1) == 2);
  CHECK(c22.inner_sums.at(0) == 0);

  CHECK_THROWS(route6_coefficient_chain(2, 4));
  CHECK_THROWS(route6_coefficient_chain(0, 1));
}

TEST_CASE("coefficient chain inner sums follow the closed form") {
  for (Index m = 1; m <= 8; ++m)
    for (Index k = 1; k <= m + 1; ++k) {
      const auto chain = route6_coefficient_chain(m, k);
      for (Index i = 0; i <= m; ++i) {
        const Integer expected = i <= k - 2 ? Integer(0) : factorial(i) * factorial(i + 1) / factorial(i - k + 1);
        CHECK(chain.inner_sums.at(i) == expected);
      }
    }
}

TEST_CASE("laurent poly derivative") {
  const auto p = poly_of({{-2, 3}, {0, 5}, {3, 1}});
  CHECK(p.derivative() == poly_of({{-3, -6}, {2, 3}}));
  CHECK(p.derivative(0) == p);
  CHECK(poly_of({{0, 7}}).derivative().is_zero());
}
