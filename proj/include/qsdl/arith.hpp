#pragma once
// Integer helpers shared by every module. Group orders overflow 64 bits, so
// everything public takes BigInt; hot loops convert to int64 themselves.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsdl {

// Expression templates off: results are always concrete numbers, which keeps
// `auto` and overload resolution predictable.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised by the text loaders; `line` is 1-based, 0 when not applicable.
struct ParseError : std::runtime_error {
  ParseError(const std::string &msg, std::size_t line);
  std::size_t line;
};

BigInt gcd(const BigInt &a, const BigInt &b);
BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

// Positive divisors of |n| in ascending order, by trial division.
// n = 0 is a domain error.
std::vector<BigInt> divisors(const BigInt &n);

bool is_prime(const BigInt &n);

// Sum_i P_i (-d)^i c^(deg-i): an integer multiple of P(-d/c). If cx+d divides
// P(x) at an integer x then cx+d divides this constant.
BigInt linear_divisor_constant(const std::vector<BigInt> &P, const BigInt &c, const BigInt &d);

// Integers x >= x_min with (c x + d) dividing the nonzero constant R.
std::vector<BigInt> linear_divisor_solutions(const BigInt &R, const BigInt &c, const BigInt &d,
                                             const BigInt &x_min);

BigInt parse_bigint(std::string_view s);
std::string str(const BigInt &n);
std::string str(const Rational &q);

inline bool fits_i64(const BigInt &n) {
  return n >= std::numeric_limits<std::int64_t>::min() &&
         n <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace qsdl
