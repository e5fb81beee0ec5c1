#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "ultratree/error.hpp"

// Under C++20, Boost 1.74's mixed rational/integer operator== recurses through
// the rewritten reversed candidate. Exact non-template overloads win overload
// resolution and sidestep it.
namespace boost {

#define ULTRATREE_RATIONAL_EQ(T)                                                                  \
  inline bool operator==(const rational<std::int64_t>& a, T b) { return a == rational<std::int64_t>(b); } \
  inline bool operator==(T a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) == b; } \
  inline bool operator!=(const rational<std::int64_t>& a, T b) { return !(a == b); }                     \
  inline bool operator!=(T a, const rational<std::int64_t>& b) { return !(a == b); }
ULTRATREE_RATIONAL_EQ(int)
ULTRATREE_RATIONAL_EQ(long)
ULTRATREE_RATIONAL_EQ(long long)
#undef ULTRATREE_RATIONAL_EQ

}  // namespace boost

namespace ultratree {

// Exact arithmetic for every weight, label and distance. boost::rational keeps
// values normalized (lowest terms, positive denominator).
using Rational = boost::rational<std::int64_t>;

inline Rational half(const Rational& x) { return x / 2; }

// Canonical text form "p/q" in lowest terms, integers included ("7/1").
inline std::string to_string(const Rational& x) {
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace detail {

inline std::int64_t parse_int64(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace detail

// Accepts "p/q", "p" and surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_int64(text, whole));
  const std::int64_t num = detail::parse_int64(text.substr(0, slash), whole);
  const std::int64_t den = detail::parse_int64(text.substr(slash + 1), whole);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
  return Rational(num, den);
}

}  // namespace ultratree
