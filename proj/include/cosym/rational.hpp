#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cosym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p", "-p" or "p/q" with q > 0 after normalization. Throws on q == 0.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(Integer(text));
  }
  Integer num(text.substr(0, slash));
  Integer den(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator: " + text);
  }
  return Rational(num, den);
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline int sign(const Rational& q) { return q.sign(); }

}  // namespace cosym
