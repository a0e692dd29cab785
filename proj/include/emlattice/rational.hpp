// Exact scalars: arbitrary-precision integers and rationals backed by GMP.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace eml {

using Integer = mpz_class;
/// Always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Raised when caller-supplied data violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Anything else (decimals, exponents, blanks)
/// is rejected.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);
Integer to_integer(const Rational& value);  // throws unless integral

Integer factorial(long n);
Integer binomial(long n, long k);
Rational pow(const Rational& base, long exponent);

inline int sign(const Rational& v) { return sgn(v); }

}  // namespace eml
