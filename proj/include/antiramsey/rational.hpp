#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace antiramsey {

using BigInt = boost::multiprecision::cpp_int;
// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(std::uint64_t n) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt out = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

inline Rational rpow(const Rational& base, std::uint64_t exp) {
  return Rational(ipow(boost::multiprecision::numerator(base), exp),
                  ipow(boost::multiprecision::denominator(base), exp));
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::domain, "zero denominator");
  return Rational(num, den);
}

// "p/q" form; integers print as "p/1" so the shape is uniform in machine output.
inline std::string to_exact_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Accepts "p/q", "p", or a finite decimal such as "0.25".
inline Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      return make_rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-") fail(ErrorKind::parse, "bad number '" + text + "'");
    return make_rational(BigInt(digits), ipow(10, text.size() - dot - 1));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::parse, "bad number '" + text + "'");
  }
}

}  // namespace antiramsey
