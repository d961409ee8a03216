#pragma once

// Exact rational scalar used throughout the library.  Backed by
// boost::multiprecision::cpp_rational, which keeps every value in canonical
// form: numerator and denominator coprime, denominator strictly positive.
// Serialization is "p/q", or plain "p" when the denominator is one.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "quadlat/errors.hpp"

namespace quadlat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den as an exact rational; any sign placement.  Throws ParseError on
/// a zero denominator.  (The backing two-argument constructor rejects
/// negative denominators, hence the division.)
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  return Rational(num) / Rational(den);
}

inline Rational make_rational(long long num, long long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

namespace detail {
inline bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  return true;
}

// The backing integer's string constructor rejects an explicit '+'.
inline Integer plain_integer(const std::string& s) {
  return Integer(s[0] == '+' ? s.substr(1) : s);
}
}  // namespace detail

/// Parse "p/q" or "p" (decimal digits, optional leading sign, no spaces).
inline Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!detail::is_plain_integer(text)) throw ParseError("bad rational: '" + text + "'");
    return Rational(detail::plain_integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!detail::is_plain_integer(num) || !detail::is_plain_integer(den))
    throw ParseError("bad rational: '" + text + "'");
  return make_rational(detail::plain_integer(num), detail::plain_integer(den));
}

/// Canonical "p/q" text ("p" when q == 1).
inline std::string to_string(const Rational& r) { return r.str(); }

/// Decimal approximation with `digits` fractional digits, rounded half away
/// from zero.  For display only; every contract value stays exact.
inline std::string to_decimal(const Rational& r, int digits) {
  if (digits < 0) digits = 0;
  Integer num = numerator(r);
  const Integer den = denominator(r);
  const bool neg = num < 0;
  if (neg) num = -num;
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer scaled = num * scale;
  Integer q = scaled / den;
  if (2 * (scaled % den) >= den) ++q;
  std::string body = q.str();
  if ((int)body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = neg ? "-" : "";
  if (digits == 0) return out + body;
  out += body.substr(0, body.size() - digits);
  out += '.';
  out += body.substr(body.size() - digits);
  return out;
}

}  // namespace quadlat
