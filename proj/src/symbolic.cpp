#include "lahid/symbolic.hpp"

#include <stdexcept>
#include <string>

#include "lahid/comb.hpp"

namespace lahid {

void LaurentPoly::add(Index exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational LaurentPoly::coefficient(Index exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly out;
  for (const auto& [b, c] : terms_) out.add(b - 1, c * b);
  return out;
}

LaurentPoly LaurentPoly::derivative(Index times) const {
  LaurentPoly out = *this;
  for (Index i = 0; i < times; ++i) out = out.derivative();
  return out;
}

ExpLaurentExpr ExpLaurentExpr::exponential() {
  ExpLaurentExpr e;
  e.add_term(1, 0, 0);
  return e;
}

void ExpLaurentExpr::add_term(const Rational& c, Index u_power, Index t_power) {
  if (u_power < 0) throw std::domain_error("negative u exponent " + std::to_string(u_power));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{u_power, t_power}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

ExpLaurentExpr expr_add(const ExpLaurentExpr& x, const ExpLaurentExpr& y) {
  ExpLaurentExpr out = x;
  for (const auto& [key, c] : y.terms()) out.add_term(c, key.first, key.second);
  return out;
}

ExpLaurentExpr expr_diff_t(const ExpLaurentExpr& e) {
  ExpLaurentExpr out;
  for (const auto& [key, c] : e.terms()) {
    const auto [a, b] = key;
    out.add_term(c * b, a, b - 1);
    out.add_term(c, a + 1, b - 2);
  }
  return out;
}

ExpLaurentExpr expr_diff_t(const ExpLaurentExpr& e, Index times) {
  ExpLaurentExpr out = e;
  for (Index i = 0; i < times; ++i) out = expr_diff_t(out);
  return out;
}

ExpLaurentExpr expr_mul_poly_u(const ExpLaurentExpr& e, const Polynomial& p) {
  ExpLaurentExpr out;
  for (const auto& [key, c] : e.terms())
    for (Index j = 0; j <= p.degree(); ++j) out.add_term(c * p[j], key.first + j, key.second);
  return out;
}

LaurentPoly expr_moment_u(const ExpLaurentExpr& e) {
  LaurentPoly out;
  for (const auto& [key, c] : e.terms()) {
    const auto [a, b] = key;
    out.add(b + a + 1, c * factorial(a));
  }
  return out;
}

ExpLaurentExpr exp_derivative_lah(Index k) {
  if (k < 1) throw std::domain_error("exp_derivative_lah: k must be positive");
  ExpLaurentExpr out;
  for (Index l = 0; l < k; ++l) out.add_term(Rational(sign_power(l) * lah(k, k - l)), k - l, l - 2 * k);
  return out;
}

LaurentPoly stirling_moment_poly(Index m) {
  if (m < 0) throw std::domain_error("stirling_moment_poly: negative m");
  const Triangle s = stirling1_triangle(m);
  LaurentPoly out;
  for (Index i = 0; i <= m; ++i) out.add(i + 1, Rational(sign_power(m + i) * factorial(i) * s.at(m, i)));
  return out;
}

CoefficientChain route6_coefficient_chain(Index m, Index k) {
  if (m < 1 || k < 1 || k > m + 1)
    throw std::domain_error("route6_coefficient_chain: need m >= 1 and 1 <= k <= m + 1");

  CoefficientChain chain;
  chain.m = m;
  chain.k = k;
  chain.side_a = stirling_moment_poly(m).derivative(k);

  // Side B keeps each u^i contribution separate so the inner sum at i can be
  // read off even where s(m,i) vanishes.
  const ExpLaurentExpr kernel = exp_derivative_lah(k);
  const std::vector<Integer> s = stirling1_from_rising_poly(m);
  for (Index i = 0; i <= m; ++i) {
    std::vector<Rational> mono(static_cast<std::size_t>(i) + 1);
    mono.back() = 1;
    const LaurentPoly part = expr_moment_u(expr_mul_poly_u(kernel, Polynomial(std::move(mono))));
    const Index exponent = i - k + 1;
    if (part.terms().size() > 1 || (!part.is_zero() && part.terms().begin()->first != exponent))
      throw std::logic_error("moment of u^" + std::to_string(i) + " term is not a single power t^" +
                             std::to_string(exponent));
    chain.inner_sums[i] = to_integer(part.coefficient(exponent));
    const Rational weight(sign_power(m - i) * s[static_cast<std::size_t>(i)]);
    for (const auto& [b, c] : part.terms()) chain.side_b.add(b, c * weight);
  }

  if (!(chain.side_a == chain.side_b))
    throw std::logic_error("coefficient chain mismatch at m=" + std::to_string(m) + ", k=" + std::to_string(k));
  return chain;
}

}  // namespace lahid
