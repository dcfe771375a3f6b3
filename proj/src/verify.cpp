#include "lahid/verify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "lahid/comb.hpp"
#include "lahid/series.hpp"
#include "lahid/symbolic.hpp"

namespace lahid {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

std::string where(const IdentityInstance& inst) {
  return " at k=" + std::to_string(inst.k()) + ", n=" + std::to_string(inst.n());
}

void check_hypergeom_domain(Index a, Index c) {
  if (a > 0) throw std::domain_error("2F1: upper parameter a must be <= 0 for termination");
  if (c < 1) throw std::domain_error("2F1: lower parameter c must be positive");
}

}  // namespace

IdentityInstance::IdentityInstance(Index k, Index n) : k_(k), n_(n) {
  if (k < 2) throw std::domain_error("identity needs k >= 2, got k=" + std::to_string(k));
  if (n < 0) throw std::domain_error("identity needs n >= 0, got n=" + std::to_string(n));
}

Integer rhs_reference(const IdentityInstance& inst) {
  const Index k = inst.k(), n = inst.n();
  if (n <= k - 2) return 0;
  return sign_power(k) * factorial(n) * factorial(n + 1) / factorial(n - k + 1);
}

Integer lhs_direct(const IdentityInstance& inst) {
  Integer sum = 0;
  for (Index l = 1; l <= inst.k(); ++l) sum += sign_power(l) * factorial(inst.n() + l) * lah(inst.k(), l);
  return sum;
}

std::pair<Integer, Integer> gkp_identity(Index l, Index m, Index s, Index n) {
  if (l < 0) throw std::domain_error("gkp_identity: l must be non-negative");
  Integer lhs = 0;
  // C(l, m+i) is nonzero only for 0 <= m+i <= l.
  for (Index i = -m; i <= l - m; ++i) lhs += binomial_general(l, m + i) * binomial_general(s + i, n) * sign_power(i);
  const Integer rhs = sign_power(l + m) * binomial_general(s - m, n - l);
  return {lhs, rhs};
}

std::pair<Integer, Integer> chu_vandermonde_identity(Index r, Index m, Index s, Index n) {
  if (r < 0) throw std::domain_error("chu_vandermonde_identity: r must be non-negative");
  Integer lhs = 0;
  for (Index j = -m; j <= r - m; ++j) lhs += binomial_general(r, m + j) * binomial_general(s, n - j);
  return {lhs, binomial_general(r + s, m + n)};
}

std::vector<Integer> binomial_inversion(const std::vector<Integer>& h) {
  std::vector<Integer> out(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    Integer acc = 0;
    for (std::size_t l = 0; l <= k; ++l)
      acc += binomial_general(static_cast<Index>(k), static_cast<Index>(l)) * sign_power(static_cast<Index>(l)) * h[l];
    out[k] = acc;
  }
  return out;
}

Rational hypergeom_2f1_terminating(Index a, Index b, Index c) {
  check_hypergeom_domain(a, c);
  Rational sum = 0;
  for (Index l = 0; l <= -a; ++l)
    sum += rising(a, l) * rising(b, l) / (rising(c, l) * Rational(factorial(l)));
  return sum;
}

Rational chu_vandermonde_closed(Index a, Index b, Index c) {
  check_hypergeom_domain(a, c);
  return rising(c - b, -a) / rising(c, -a);
}

// Divide by k! n! to get sum (-1)^l C(n+l,n) C(k-1,l-1) = (-1)^k C(n+1,k),
// which is the GKP sum at l = k-1, m = -1, s = n.
Integer route1_gkp(const IdentityInstance& inst) {
  const Index k = inst.k(), n = inst.n();
  Integer reduced = 0;
  for (Index l = 1; l <= k; ++l) reduced += sign_power(l) * binomial_general(n + l, n) * binomial_general(k - 1, l - 1);
  const auto [gkp_lhs, gkp_rhs] = gkp_identity(k - 1, -1, n, n);
  require(gkp_lhs == reduced, "route1: GKP sum does not reproduce the reduced sum" + where(inst));
  require(gkp_lhs == gkp_rhs, "route1: GKP identity fails" + where(inst));
  require(gkp_rhs == sign_power(k) * binomial_general(n + 1, k), "route1: closed form disagrees" + where(inst));
  return gkp_rhs * factorial(k) * factorial(n);
}

// Row k of sum_l L(k,l) <t>_l = (-1)^k <-t>_k at t = -(n+1), using
// n! <-n-1>_l = (-1)^l (n+l)!.
Integer route2_factorial_gf(const IdentityInstance& inst) {
  const Index k = inst.k(), n = inst.n();
  const Rational t(-(n + 1));
  Rational gf_side = 0;
  for (Index l = 0; l <= k; ++l) {
    const Rational fall = falling(t, l);
    require(fall * factorial(n) == Rational(sign_power(l) * factorial(n + l)),
            "route2: falling factorial rewrite fails" + where(inst));
    gf_side += Rational(lah(k, l)) * fall;
  }
  const Rational closed_side = Rational(sign_power(k)) * falling(-t, k);
  require(gf_side == closed_side, "route2: factorial generating function fails" + where(inst));
  return to_integer(closed_side * factorial(n));
}

// [x^k] of (1+x)^-(n+1) (1+x)^(k-1) = (1+x)^-(n-k+2).
Integer route3_convolution(const IdentityInstance& inst) {
  const Index k = inst.k(), n = inst.n();
  const TruncatedSeries product =
      series_mul(series_binomial_power(-(n + 1), k), series_binomial_power(k - 1, k));
  const TruncatedSeries merged = series_binomial_power(-(n - k + 2), k);
  require(product[k] == merged[k], "route3: convolution coefficient mismatch" + where(inst));
  return to_integer(merged[k] * factorial(k) * factorial(n));
}

// With a(l) = (n+l)!/(l-1)! the target is (k-1)! T(a)(k). Check
// T(b) = a on 0..k for b(l) = (-1)^l n!(n+1)!/((n-l+1)!(l-1)!), then
// invert: T(a) = T(T(b)) = b.
Integer route4_inversion(const IdentityInstance& inst) {
  const Index k = inst.k(), n = inst.n();
  const Integer nf = factorial(n), n1f = factorial(n + 1);
  std::vector<Integer> a, b;
  for (Index l = 0; l <= k; ++l) {
    a.push_back(to_integer(Rational(factorial(n + l)) * reciprocal_factorial_weight(l - 1)));
    b.push_back(to_integer(Rational(sign_power(l) * nf * n1f) * reciprocal_factorial_weight(n - l + 1) *
                           reciprocal_factorial_weight(l - 1)));
  }
  require(binomial_inversion(b) == a, "route4: dual identity fails" + where(inst));
  const std::vector<Integer> inverted = binomial_inversion(a);
  require(inverted == b, "route4: inversion does not recover b" + where(inst));
  return inverted[static_cast<std::size_t>(k)] * factorial(k - 1);
}

// Equals -k!(n+1)! 2F1(1-k, n+2; 2; 1).
Integer route5_hypergeom(const IdentityInstance& inst) {
  const Index k = inst.k(), n = inst.n();
  const Rational closed = chu_vandermonde_closed(1 - k, n + 2, 2);
  require(closed == hypergeom_2f1_terminating(1 - k, n + 2, 2), "route5: 2F1 sum disagrees with Chu-Vandermonde" + where(inst));
  const Rational value = -Rational(factorial(k) * factorial(n + 1)) * closed;
  require(denominator(value) == 1, "route5: non-integral result" + where(inst));
  return numerator(value);
}

// Inner sum at i = n is sum_{l=0}^{k-1} (-1)^l (n+k-l)! L(k,k-l), which is
// (-1)^k times the target after substituting l -> k-l.
Integer route6_stirling(const IdentityInstance& inst) {
  const Index k = inst.k(), n = inst.n();
  const Index m = std::max(k, n + 1);
  const CoefficientChain chain = route6_coefficient_chain(m, k);
  return sign_power(k) * chain.inner_sums.at(n);
}

std::optional<Route> standard_route(const std::string& name) {
  static const std::map<std::string, RouteFn> table = {
      {"r1", route1_gkp},       {"r2", route2_factorial_gf}, {"r3", route3_convolution},
      {"r4", route4_inversion}, {"r5", route5_hypergeom},    {"r6", route6_stirling},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return Route{it->first, it->second};
}

std::vector<std::string> standard_route_names() { return {"r1", "r2", "r3", "r4", "r5", "r6"}; }

namespace {

VerificationReport evaluate(const IdentityInstance& inst, const std::vector<Route>& routes) {
  VerificationReport rep{inst, rhs_reference(inst), lhs_direct(inst), {}, {}, false};
  bool ok = rep.lhs == rep.reference;
  for (const auto& route : routes) {
    try {
      Integer v = route.fn(inst);
      ok = ok && v == rep.reference;
      rep.route_values.emplace(route.name, std::move(v));
    } catch (const std::exception& e) {
      rep.route_errors.emplace(route.name, e.what());
      ok = false;
    }
  }
  rep.all_match = ok;
  return rep;
}

}  // namespace

std::vector<VerificationReport> verify_grid(IndexRange k_range, IndexRange n_range,
                                            const std::vector<Route>& routes, unsigned jobs) {
  std::vector<IdentityInstance> grid;
  for (Index k = k_range.lo; k <= k_range.hi; ++k)
    for (Index n = n_range.lo; n <= n_range.hi; ++n) grid.emplace_back(k, n);

  std::vector<std::optional<VerificationReport>> slots(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) slots[i] = evaluate(grid[i], routes);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<VerificationReport> out;
  out.reserve(grid.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace lahid
