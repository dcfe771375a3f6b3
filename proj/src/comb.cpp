#include "lahid/comb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lahid/series.hpp"

namespace lahid {

Triangle::Triangle(Index max_n) : max_n_(max_n) {
  if (max_n < 0) throw std::invalid_argument("triangle size must be non-negative");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  for (Index n = 0; n <= max_n; ++n) rows_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Integer(0));
}

Integer Triangle::at(Index n, Index k) const {
  if (n < 0 || n > max_n_) throw std::out_of_range("triangle row " + std::to_string(n) + " out of range");
  if (k < 0 || k > n) return 0;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void Triangle::set(Index n, Index k, Integer value) {
  if (n < 0 || n > max_n_ || k < 0 || k > n) throw std::out_of_range("triangle entry out of range");
  rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(value);
}

const std::vector<Integer>& Triangle::row(Index n) const {
  if (n < 0 || n > max_n_) throw std::out_of_range("triangle row out of range");
  return rows_[static_cast<std::size_t>(n)];
}

Integer lah(Index n, Index k) {
  if (n < 0 || k < 0) throw std::domain_error("lah: negative index");
  if (n == 0 && k == 0) return 1;
  if (k < 1 || k > n) return 0;
  return binomial_general(n - 1, k - 1) * factorial(n) / factorial(k);
}

namespace {

// Set partitions as restricted growth strings; at each leaf with the wanted
// number of blocks, every internal ordering of every block is walked.
class OrderedBlockCounter {
 public:
  OrderedBlockCounter(Index n, Index k) : n_(n), k_(k) {}

  Integer run() {
    assign(1);
    return count_;
  }

 private:
  void assign(Index element) {
    if (element > n_) {
      if (static_cast<Index>(blocks_.size()) == k_) order_block(0);
      return;
    }
    // Index, not reference: deeper calls may grow blocks_.
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      blocks_[b].push_back(element);
      assign(element + 1);
      blocks_[b].pop_back();
    }
    if (static_cast<Index>(blocks_.size()) < k_) {
      blocks_.push_back({element});
      assign(element + 1);
      blocks_.pop_back();
    }
  }

  void order_block(std::size_t b) {
    if (b == blocks_.size()) {
      ++count_;
      return;
    }
    auto& block = blocks_[b];
    std::sort(block.begin(), block.end());
    do {
      order_block(b + 1);
    } while (std::next_permutation(block.begin(), block.end()));
  }

  Index n_;
  Index k_;
  std::vector<std::vector<Index>> blocks_;
  Integer count_ = 0;
};

}  // namespace

Integer lah_bruteforce(Index n, Index k) {
  if (n < 1 || n > kLahBruteforceMaxN)
    throw std::out_of_range("lah_bruteforce: n must lie in [1, " + std::to_string(kLahBruteforceMaxN) + "]");
  if (k < 1) throw std::domain_error("lah_bruteforce: k must be positive");
  if (k > n) return 0;
  return OrderedBlockCounter(n, k).run();
}

Integer ordered_list_partitions_total(Index n) {
  if (n < 1 || n > kLahBruteforceMaxN)
    throw std::out_of_range("ordered_list_partitions_total: n must lie in [1, " +
                            std::to_string(kLahBruteforceMaxN) + "]");
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{1});
  const std::uint32_t cuts = std::uint32_t{1} << (n - 1);
  Integer total = 0;
  do {
    for (std::uint32_t mask = 0; mask < cuts; ++mask) {
      // Bit i set: a block boundary after position i. Count the arrangement
      // once by requiring block minima to increase left to right.
      Index prev_min = 0;
      Index cur_min = perm[0];
      bool canonical = true;
      for (Index i = 1; i < n && canonical; ++i) {
        if (mask & (std::uint32_t{1} << (i - 1))) {
          if (cur_min < prev_min) canonical = false;
          prev_min = cur_min;
          cur_min = perm[static_cast<std::size_t>(i)];
        } else {
          cur_min = std::min(cur_min, perm[static_cast<std::size_t>(i)]);
        }
      }
      if (canonical && cur_min > prev_min) ++total;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Triangle lah_triangle(Index max_n) {
  Triangle t(max_n);
  t.set(0, 0, 1);
  for (Index n = 0; n < max_n; ++n)
    for (Index k = 1; k <= n + 1; ++k) t.set(n + 1, k, t.at(n, k - 1) + Integer(n + k) * t.at(n, k));
  return t;
}

Triangle stirling1_triangle(Index max_n) {
  Triangle t(max_n);
  t.set(0, 0, 1);
  for (Index n = 0; n < max_n; ++n)
    for (Index k = 0; k <= n + 1; ++k) t.set(n + 1, k, t.at(n, k - 1) - Integer(n) * t.at(n, k));
  return t;
}

Integer stirling1(Index n, Index k) {
  if (n < 0 || k < 0) throw std::domain_error("stirling1: negative index");
  if (k > n) return 0;
  return stirling1_triangle(n).at(n, k);
}

std::vector<Integer> stirling1_from_rising_poly(Index n) {
  if (n < 0) throw std::domain_error("stirling1_from_rising_poly: negative n");
  const Polynomial p = rising_factorial_poly(n);
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  // [x^k] = (-1)^(n-k) s(n,k)
  for (Index k = 0; k <= n; ++k) out.push_back(sign_power(n - k) * to_integer(p[k]));
  return out;
}

std::vector<Rational> stirling1_from_log_series(Index max_n, Index k) {
  if (k < 0 || k > max_n) throw std::domain_error("stirling1_from_log_series: need 0 <= k <= max_n");
  const TruncatedSeries s = series_pow(series_log1p(max_n), k).scaled(make_rational(1, factorial(k)));
  return {s.coeffs().begin(), s.coeffs().end()};
}

}  // namespace lahid
