#include <stdexcept>

#include "doctest.h"
#include "lahid/comb.hpp"
#include "oracles.hpp"

using namespace lahid;

TEST_CASE("lah examples") {
  CHECK(lah(3, 2) == 6);
  for (Index n = 0; n <= 12; ++n) CHECK(lah(n, n) == 1);
  CHECK(lah(4, 1) == 24);
  CHECK(lah(2, 3) == 0);
  CHECK(lah(0, 0) == 1);
  CHECK(lah(5, 0) == 0);
  CHECK_THROWS_AS(lah(-1, 0), std::domain_error);
}

TEST_CASE("lah_bruteforce examples and bounds") {
  CHECK(lah_bruteforce(3, 2) == 6);
  CHECK(lah_bruteforce(1, 1) == 1);
  CHECK(lah_bruteforce(4, 4) == 1);
  CHECK(lah_bruteforce(3, 5) == 0);
  CHECK_THROWS_AS(lah_bruteforce(0, 1), std::out_of_range);
  CHECK_THROWS_AS(lah_bruteforce(10, 2), std::out_of_range);
  CHECK_THROWS_AS(lah_bruteforce(3, 0), std::domain_error);
}

TEST_CASE("lah three ways agree") {
  const Triangle t = lah_triangle(8);
  for (Index n = 1; n <= 8; ++n)
    for (Index k = 1; k <= n; ++k) {
      CHECK(lah(n, k) == t.at(n, k));
      CHECK(lah(n, k) == lah_bruteforce(n, k));
    }
}

TEST_CASE("lah row sums match unfiltered enumeration") {
  // 1, 3, 13, 73, 501, 4051, 37633, 394353 for n = 1..8.
  const Integer expected[] = {1, 3, 13, 73, 501, 4051, 37633, 394353};
  for (Index n = 1; n <= 8; ++n) {
    Integer row = 0;
    for (Index k = 1; k <= n; ++k) row += lah_bruteforce(n, k);
    CHECK(row == ordered_list_partitions_total(n));
    CHECK(row == expected[n - 1]);
  }
}

TEST_CASE("lah triangle shape") {
  const Triangle t = lah_triangle(2);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(2, 1) == 2);
  CHECK(t.at(2, 2) == 1);
  CHECK(t.at(1, 0) == 0);
  CHECK(t.at(2, 0) == 0);
  CHECK(t.at(2, 3) == 0);
  CHECK(t.at(2, -1) == 0);
  CHECK_THROWS_AS(t.at(3, 1), std::out_of_range);
  const Triangle t3 = lah_triangle(3);
  CHECK(t3.at(3, 1) == 6);
  CHECK(t3.at(3, 2) == 6);
  CHECK(t3.at(3, 3) == 1);
  for (Index n = 1; n <= 3; ++n) CHECK(t3.at(n, 0) == 0);
}

TEST_CASE("stirling1 examples") {
  CHECK(stirling1(3, 2) == -3);
  for (Index n = 0; n <= 10; ++n) CHECK(stirling1(n, n) == 1);
  CHECK(stirling1(4, 1) == -6);
  CHECK(stirling1(2, 5) == 0);
  CHECK(stirling1(0, 0) == 1);
  CHECK(stirling1(5, 0) == 0);
}

TEST_CASE("stirling1 matches permutation cycle counts") {
  for (Index n = 0; n <= 8; ++n) {
    const auto ref = oracle::stirling1_by_cycles(n);
    for (Index k = 0; k <= n; ++k) CHECK(stirling1(n, k) == ref[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("stirling1_from_rising_poly") {
  CHECK(stirling1_from_rising_poly(3) == std::vector<Integer>{0, 2, -3, 1});
  CHECK(stirling1_from_rising_poly(0) == std::vector<Integer>{1});
  CHECK(stirling1_from_rising_poly(2) == std::vector<Integer>{0, -1, 1});
}

TEST_CASE("stirling1_from_log_series") {
  const auto k0 = stirling1_from_log_series(6, 0);
  CHECK(k0[0] == 1);
  for (std::size_t n = 1; n < k0.size(); ++n) CHECK(k0[n] == 0);
  CHECK(stirling1_from_log_series(3, 2)[3] == Rational(-1, 2));
  const auto k1 = stirling1_from_log_series(10, 1);
  for (Index n = 1; n <= 10; ++n) CHECK(k1[static_cast<std::size_t>(n)] == make_rational(sign_power(n - 1), n));
  CHECK_THROWS(stirling1_from_log_series(3, 4));
}

TEST_CASE("stirling1 three ways agree") {
  const Index max_n = 25;
  const Triangle t = stirling1_triangle(max_n);
  for (Index k = 0; k <= max_n; ++k) {
    const auto log_coeffs = stirling1_from_log_series(max_n, k);
    for (Index n = k; n <= max_n; ++n) {
      const auto poly = stirling1_from_rising_poly(n);
      CHECK(t.at(n, k) == poly[static_cast<std::size_t>(k)]);
      CHECK(Rational(t.at(n, k)) == log_coeffs[static_cast<std::size_t>(n)] * factorial(n));
    }
  }
  for (Index n = 0; n <= 10; ++n)
    for (Index k = n + 1; k <= 12; ++k) {
      CHECK(stirling1(n, k) == 0);
      CHECK(lah(n, k) == 0);
    }
}
