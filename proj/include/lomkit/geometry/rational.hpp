#pragma once

// Exact numbers for the geometry modules.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "lomkit/errors.hpp"

namespace lomkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Integer &x) { return x.sign(); }
inline int sign(const Rational &x) { return x.sign(); }

/// Parses "p/q", "p" or "-p" with an optional leading '+'.
inline Rational parse_rational(std::string_view text) {
  auto digits = [&](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!digits(num)) throw ParseError("not a rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  const Integer p{std::string(num)};
  if (slash == std::string_view::npos) return Rational(p);
  std::string_view den = text.substr(slash + 1);
  if (!digits(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("not a rational: '" + std::string(text) + "'");
  const Integer q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

inline std::string to_string(const Rational &x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace lomkit
