#pragma once

// Exact scalars and the factorial/binomial primitives shared by every module.

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace lahid {

/// Unbounded signed integer.
using Integer = boost::multiprecision::mpz_int;

/// Unbounded rational; the GMP backend keeps it canonical (den > 0, gcd = 1).
using Rational = boost::multiprecision::mpq_rational;

/// Machine-sized index type for n, k, l and friends.
using Index = std::int64_t;

Integer factorial(Index m);

/// Generalized binomial C(r, j) for any integer r; zero when j < 0.
Integer binomial_general(const Integer& r, Index j);
Integer binomial_general(Index r, Index j);

/// x(x+1)...(x+n-1), and 1 for n = 0.
Rational rising(const Rational& x, Index n);

/// x(x-1)...(x-n+1), and 1 for n = 0.
Rational falling(const Rational& x, Index n);

/// 1/m! for m >= 0 and 0 for negative m, so 1/(-1)! vanishes in extended sums.
Rational reciprocal_factorial_weight(Index m);

/// (-1)^e as an Integer.
inline Integer sign_power(Index e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

Rational make_rational(const Integer& num, const Integer& den);

/// Numerator of r; throws std::logic_error if r is not integral.
Integer to_integer(const Rational& r);

inline std::string to_string(const Integer& v) { return v.str(); }
std::string to_string(const Rational& v);

}  // namespace lahid
