#pragma once

#include <vector>

#include "lahid/exact.hpp"

namespace lahid {

/// Lower-triangular table of exact integers indexed (n, k), 0 <= k <= n <= max_n.
class Triangle {
 public:
  explicit Triangle(Index max_n);

  Index max_n() const { return max_n_; }

  /// Entries with k < 0 or k > n read as zero. Rows past max_n throw.
  Integer at(Index n, Index k) const;
  void set(Index n, Index k, Integer value);

  const std::vector<Integer>& row(Index n) const;

 private:
  Index max_n_;
  std::vector<std::vector<Integer>> rows_;
};

/// L(n,k) = C(n-1,k-1) n!/k!, with L(0,0) = 1.
Integer lah(Index n, Index k);

inline constexpr Index kLahBruteforceMaxN = 9;

/// Counts partitions of {1..n} into k nonempty ordered lists by enumeration.
/// Requires 1 <= n <= kLahBruteforceMaxN.
Integer lah_bruteforce(Index n, Index k);

/// Number of partitions of {1..n} into nonempty ordered lists of any count,
/// enumerated as permutations cut into runs whose minima increase.
Integer ordered_list_partitions_total(Index n);

/// Lah table via L(n+1,k) = L(n,k-1) + (n+k) L(n,k).
Triangle lah_triangle(Index max_n);

/// Signed Stirling numbers of the first kind via s(n+1,k) = s(n,k-1) - n s(n,k).
Triangle stirling1_triangle(Index max_n);
Integer stirling1(Index n, Index k);

/// s(n,0..n) read off the expansion of x(x+1)...(x+n-1).
std::vector<Integer> stirling1_from_rising_poly(Index n);

/// Coefficients of t^0..t^max_n in [ln(1+t)]^k / k!, i.e. s(n,k)/n!.
std::vector<Rational> stirling1_from_log_series(Index max_n, Index k);

}  // namespace lahid
