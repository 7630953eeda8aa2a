#include "simplex/bigint.hpp"

#include <cstdint>
#include <limits>

namespace simplex {

namespace {

// Results are capped at 2^28 bits (32 MiB): far above any count this
// project reports, far below sizes that would thrash the allocator.
constexpr std::uint64_t kMaxResultBits = std::uint64_t{1} << 28;

unsigned exponent_to_unsigned(const BigInt& exp) {
  if (exp > std::numeric_limits<unsigned>::max()) {
    throw std::overflow_error("exponent " + exp.str() +
                              " is too large to materialize a value");
  }
  return exp.convert_to<unsigned>();
}

void check_result_size(const BigInt& base, unsigned e) {
  if (base <= 1 && base >= -1) return;
  BigInt magnitude = abs(base);
  std::uint64_t base_bits = boost::multiprecision::msb(magnitude) + 1;
  if (base_bits * e > kMaxResultBits) {
    throw std::overflow_error("power of a " + std::to_string(base_bits) +
                              "-bit base to exponent " + std::to_string(e) +
                              " exceeds the result-size cap");
  }
}

}  // namespace

BigInt int_pow(const BigInt& base, const BigInt& exp) {
  if (exp < 0) {
    throw std::invalid_argument("int_pow: negative exponent " + exp.str());
  }
  unsigned e = exponent_to_unsigned(exp);
  check_result_size(base, e);
  return boost::multiprecision::pow(base, e);
}

BigRat rat_pow(const BigRat& base, const BigInt& exp) {
  if (exp < 0) {
    if (base == 0) {
      throw std::invalid_argument("rat_pow: zero base with negative exponent");
    }
    BigRat inv = BigRat(1) / base;
    return rat_pow(inv, -exp);
  }
  unsigned e = exponent_to_unsigned(exp);
  BigInt num = boost::multiprecision::numerator(base);
  BigInt den = boost::multiprecision::denominator(base);
  check_result_size(num, e);
  check_result_size(den, e);
  return BigRat(boost::multiprecision::pow(num, e),
                boost::multiprecision::pow(den, e));
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt double_factorial(long n) {
  BigInt r = 1;
  for (long k = n; k >= 2; k -= 2) r *= k;
  return r;
}

bool is_integer(const BigRat& r) {
  return boost::multiprecision::denominator(r) == 1;
}

BigInt require_integer(const BigRat& r, const std::string& what) {
  if (!is_integer(r)) {
    throw IntegralityError(what + " is not an integer: " + r.str());
  }
  return boost::multiprecision::numerator(r);
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace simplex
