#pragma once

// Exact scalars. Both types are GMP-backed Boost.Multiprecision numbers with
// expression templates disabled so that they behave as plain value types
// inside Eigen matrices and standard containers.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace morita {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

/// Throws Error(NonInteger) when r has a nontrivial denominator.
Integer to_integer(const Rational& r);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Anything
/// else (decimals, exponents, q = 0) is rejected with Error(InvalidArgument).
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

/// Sign of an integer as -1, 0 or +1.
inline int sign(const Integer& z) { return z.sign(); }

}  // namespace morita
