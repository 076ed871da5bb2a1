#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace kconvex {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const Int& i) { return i.sign(); }

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Parses "123", "-4/7" etc. Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("malformed rational: '" + s + "'");
  };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace kconvex
