#pragma once

// Test-only reference computations. None of these call into the library's
// combinatorial code paths; they are deliberately naive.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "lahid/exact.hpp"

namespace oracle {

using lahid::Index;
using lahid::Integer;
using lahid::Rational;

inline Integer product_factorial(Index m) {
  Integer acc = 1;
  for (Index j = m; j > 1; --j) acc *= j;
  return acc;
}

/// Pascal table over 0 <= r <= max_r, extended to negative r by upper
/// negation C(r,j) = (-1)^j C(j-r-1, j).
class Binomials {
 public:
  explicit Binomials(Index max_r) : rows_(static_cast<std::size_t>(max_r) + 1) {
    for (Index r = 0; r <= max_r; ++r) {
      auto& row = rows_[static_cast<std::size_t>(r)];
      row.assign(static_cast<std::size_t>(r) + 1, Integer(1));
      for (Index j = 1; j < r; ++j)
        row[static_cast<std::size_t>(j)] =
            rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)] +
            rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)];
    }
  }

  Integer operator()(Index r, Index j) const {
    if (j < 0) return 0;
    if (r < 0) return ((j % 2) ? Integer(-1) : Integer(1)) * (*this)(j - r - 1, j);
    if (j > r) return 0;
    return rows_.at(static_cast<std::size_t>(r))[static_cast<std::size_t>(j)];
  }

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// Signed s(n,k) from counting the cycles of every permutation of n points.
inline std::vector<Integer> stirling1_by_cycles(Index n) {
  std::vector<Integer> counts(static_cast<std::size_t>(n) + 1, Integer(0));
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  do {
    std::vector<bool> seen(perm.size(), false);
    Index cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
    }
    ++counts[static_cast<std::size_t>(cycles)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (Index k = 0; k <= n; ++k)
    if ((n - k) % 2) counts[static_cast<std::size_t>(k)] = -counts[static_cast<std::size_t>(k)];
  return counts;
}

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 50, int den_bound = 12) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace oracle
