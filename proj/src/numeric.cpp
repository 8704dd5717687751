#include "saito/numeric.hpp"

#include <limits>

#include "saito/errors.hpp"

namespace saito {

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::Syntax, "empty number in '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error(ErrorCode::Syntax, "bad number '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::Syntax, "bad number '" + text + "'");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::Syntax, "zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::BoundExceeded, "integer " + value.str() + " exceeds 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace saito
