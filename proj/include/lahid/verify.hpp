#pragma once

// Independent computations of
//   sum_{l=1}^{k} (-1)^l (n+l)! L(k,l)
// for k >= 2, n >= 0, one per route, plus the classical identities they use.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lahid/exact.hpp"

namespace lahid {

/// A (k, n) pair with k >= 2 and n >= 0.
class IdentityInstance {
 public:
  /// Throws std::domain_error outside the valid range.
  IdentityInstance(Index k, Index n);

  Index k() const { return k_; }
  Index n() const { return n_; }

  friend auto operator<=>(const IdentityInstance&, const IdentityInstance&) = default;

 private:
  Index k_;
  Index n_;
};

/// Closed form: 0 for n <= k-2, else (-1)^k n!(n+1)!/(n-k+1)!.
Integer rhs_reference(const IdentityInstance& inst);

/// The literal alternating sum over Lah numbers.
Integer lhs_direct(const IdentityInstance& inst);

/// sum_i C(l,m+i) C(s+i,n) (-1)^i against (-1)^(l+m) C(s-m,n-l), for l >= 0.
std::pair<Integer, Integer> gkp_identity(Index l, Index m, Index s, Index n);

/// sum_j C(r,m+j) C(s,n-j) against C(r+s,m+n), for r >= 0.
std::pair<Integer, Integer> chu_vandermonde_identity(Index r, Index m, Index s, Index n);

/// T(h)(k) = sum_{l=0}^{k} C(k,l) (-1)^l h(l). T is an involution.
std::vector<Integer> binomial_inversion(const std::vector<Integer>& h);

/// 2F1(a, b; c; 1) summed exactly; requires a <= 0 and c >= 1.
Rational hypergeom_2f1_terminating(Index a, Index b, Index c);
/// (c-b)_{-a} / (c)_{-a}; same domain.
Rational chu_vandermonde_closed(Index a, Index b, Index c);

Integer route1_gkp(const IdentityInstance& inst);
Integer route2_factorial_gf(const IdentityInstance& inst);
Integer route3_convolution(const IdentityInstance& inst);
Integer route4_inversion(const IdentityInstance& inst);
Integer route5_hypergeom(const IdentityInstance& inst);
Integer route6_stirling(const IdentityInstance& inst);

/// Route 6 is symbolic and is only run by default inside this box.
inline constexpr Index kRoute6DefaultMaxK = 8;
inline constexpr Index kRoute6DefaultMaxN = 10;

using RouteFn = std::function<Integer(const IdentityInstance&)>;

struct Route {
  std::string name;
  RouteFn fn;
};

/// r1..r6; empty optional for an unknown name.
std::optional<Route> standard_route(const std::string& name);
std::vector<std::string> standard_route_names();

struct VerificationReport {
  IdentityInstance instance;
  Integer reference;
  Integer lhs;
  std::map<std::string, Integer> route_values;
  /// Route name -> message, for routes whose internal checks threw.
  std::map<std::string, std::string> route_errors;
  bool all_match = false;
};

struct IndexRange {
  Index lo = 0;
  Index hi = -1;
};

/// One report per (k, n) in lexicographic order. Work is spread over `jobs`
/// threads; the result does not depend on `jobs`.
std::vector<VerificationReport> verify_grid(IndexRange k_range, IndexRange n_range,
                                            const std::vector<Route>& routes, unsigned jobs = 1);

}  // namespace lahid
