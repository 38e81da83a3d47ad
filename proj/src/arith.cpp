#include "qsdl/arith.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>

namespace qsdl {

ParseError::ParseError(const std::string &msg, std::size_t line_no)
    : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
      line(line_no) {}

BigInt gcd(const BigInt &a, const BigInt &b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<BigInt> divisors(const BigInt &n) {
  if (n == 0) throw DomainError("divisors of 0");
  BigInt m = boost::multiprecision::abs(n);
  std::vector<BigInt> lo, hi;
  if (m < (BigInt(1) << 62)) {
    auto w = m.convert_to<std::uint64_t>();
    for (std::uint64_t d = 1; d * d <= w; ++d) {
      if (w % d != 0) continue;
      lo.emplace_back(d);
      if (d * d != w) hi.emplace_back(w / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
  }
  for (BigInt d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    lo.push_back(d);
    if (d * d != m) hi.push_back(m / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

bool is_prime(const BigInt &n) {
  if (n < 2) return false;
  for (BigInt d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt linear_divisor_constant(const std::vector<BigInt> &P, const BigInt &c, const BigInt &d) {
  const std::size_t deg = P.empty() ? 0 : P.size() - 1;
  BigInt total = 0, dpow = 1;
  for (std::size_t i = 0; i < P.size(); ++i) {
    total += P[i] * dpow * boost::multiprecision::pow(c, static_cast<unsigned>(deg - i));
    dpow *= -d;
  }
  return total;
}

std::vector<BigInt> linear_divisor_solutions(const BigInt &R, const BigInt &c, const BigInt &d,
                                             const BigInt &x_min) {
  if (c == 0) throw DomainError("linear_divisor_solutions needs c != 0");
  std::vector<BigInt> xs;
  for (const auto &t : divisors(R)) {
    for (const BigInt &s : {t, BigInt(-t)}) {
      BigInt diff = s - d;
      if (diff % c != 0) continue;
      BigInt x = diff / c;
      if (x >= x_min) xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

BigInt parse_bigint(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i == s.size()) throw ParseError("empty integer", 0);
  BigInt n = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("not an integer: '" + std::string(s) + "'", 0);
    n = n * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-n) : n;
}

std::string str(const BigInt &n) { return n.str(); }

std::string str(const Rational &q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace qsdl
