#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qfrep {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "n", "-n", "n/d" (whitespace not allowed); result is canonicalized.
Rational parse_rational(const std::string& text);
// "num/den", with "/den" omitted when den = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Rational make_rational(long num, long den = 1);
Rational rational_pow(const Rational& r, long e);
Integer integer_pow(const Integer& z, unsigned long e);

// Nonnegative square root when r is the square of a rational.
std::optional<Rational> rational_is_square(const Rational& r);
std::optional<Integer> integer_sqrt_exact(const Integer& z);

// Unique squarefree d with n = d*k^2 (sign preserved). n = 0 is a domain error.
Integer squarefree_part(const Integer& n);
// Squarefree integer representing the class of r in Q*/Q*^2.
Integer square_class(const Rational& r);
bool same_square_class(const Rational& r1, const Rational& r2);

// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);
bool is_probable_prime(const Integer& n);
// Prime factors of |n| (n != 0) below `bound` by trial division; the unfactored part of |n|
// is stored in *cofactor when requested.
std::vector<std::pair<Integer, unsigned>> small_prime_factors(const Integer& n, unsigned long bound,
                                                             Integer* cofactor = nullptr);

// p-adic valuation of a nonzero rational; +infinity is not representable, so 0 is a domain error.
long valuation(const Rational& r, const Integer& p);
long valuation(const Integer& z, const Integer& p);

// Combined numerator + denominator bit length (a "height" in bits).
std::size_t bit_height(const Rational& r);

}  // namespace qfrep
