#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace quatnum {

// All arithmetic in this library is exact. Integers and rationals are
// GMP values; rationals are kept canonical (lowest terms, positive
// denominator), so equality is structural.
using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when a textual literal (rational, quaternion, ...) is malformed.
// Distinct from std::invalid_argument so front ends can map it to a usage
// error instead of a domain error.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Canonical rational from a possibly unreduced fraction. den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

// "p/q" when the denominator is not 1, plain "p" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p" and "p/q" with an optional sign; rejects everything else.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// Legendre symbol (a/p) for an odd prime p, computed by Euler's criterion.
// Returns 0 iff p | a, otherwise +/-1.
int legendre(const Integer& a, const Integer& p);

// Deterministic primality test. Exact for every n < 2^64 (fixed Miller-Rabin
// witness set); falls back to trial division above that, which stays exact.
bool is_prime(const Integer& n);

// Floor of the square root; rejects negative input.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

// base^exp mod m with exp >= 0, m > 0.
Integer mod_pow(const Integer& base, const Integer& exp, const Integer& mod);

}  // namespace quatnum
