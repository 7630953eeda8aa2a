#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "simplex/errors.hpp"

namespace simplex {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// base^exp for exp >= 0. Throws std::invalid_argument on negative exp and
/// std::overflow_error when exp is too large to materialize the result.
BigInt int_pow(const BigInt& base, const BigInt& exp);

/// base^exp over the rationals; negative exponents take the reciprocal.
BigRat rat_pow(const BigRat& base, const BigInt& exp);

BigInt factorial(unsigned n);

/// n!! with the empty-product convention (-1)!! = 0!! = 1.
BigInt double_factorial(long n);

bool is_integer(const BigRat& r);

/// Converts an exactly-integral rational; throws IntegralityError naming
/// `what` otherwise.
BigInt require_integer(const BigRat& r, const std::string& what);

std::string to_decimal(const BigInt& v);

}  // namespace simplex
