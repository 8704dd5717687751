#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace saito {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

// Parses "p" or "p/q" with an optional sign.
Rational parse_rational(const std::string& text);

std::int64_t to_int64(const BigInt& value);

// Non-negative remainder.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace saito
