#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <utility>

namespace puiseux {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;  // dynamic precision

unsigned digits10_for_bits(unsigned bits);

// BigFloat constructors with explicit working precision.  Binary operations
// propagate the larger operand precision, so seeding every leaf value this way
// keeps kernels independent of the global MPFR default.
BigFloat bf(long v, unsigned bits);
BigFloat bf(const Rational& q, unsigned bits);
BigFloat bf(const Integer& n, unsigned bits);
// 2^e at the given precision.
BigFloat bf_pow2(long e, unsigned bits);

// "n/d" in lowest terms, or plain "n" when d == 1.
std::string rational_str(const Rational& q);

// Exact square root of a non-negative rational if one exists.
std::optional<Rational> exact_sqrt(const Rational& q);

// n = k^2 * s with s squarefree, for n > 0.  Factors by trial division up to a
// fixed bound; a leftover cofactor that is not a perfect square is treated as
// squarefree (fine for the CLI-scale integers this sees).
std::pair<Integer, Integer> squarefree_split(const Integer& n);

Integer binomial(unsigned n, unsigned k);

Integer floor_div(const Integer& a, const Integer& b);
Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);

// Parses "123", "3/4" or a decimal like "0.8" into an exact rational.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace puiseux
