// Exact rational payoffs and their canonical text form.
//
// Every payoff, fee and payment is a reduced fraction with a positive
// denominator. Text form is "p" for integers and "p/q" otherwise; decimal
// literals are rejected so that no value ever passes through floating point.

#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace extortion {

using Rational = boost::rational<std::int64_t>;

class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw RationalParseError("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses "p" or "p/q". Rejects decimal and exponent notation outright.
inline Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.find_first_of(".eE") != std::string_view::npos) {
    throw RationalParseError("floating-point literal '" + std::string(whole) +
                             "'; use p/q");
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_integer(text, whole));
  }
  const auto num = detail::parse_integer(text.substr(0, slash), whole);
  const auto den = detail::parse_integer(text.substr(slash + 1), whole);
  if (den == 0) {
    throw RationalParseError("zero denominator in '" + std::string(whole) + "'");
  }
  return Rational(num, den);
}

inline std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

/// Decimal rendering of `value * 100` rounded half-up to `places` digits, with
/// trailing zeros trimmed ("56.25", "16.67", "25").
inline std::string format_percent(const Rational& value, int places = 2) {
  Rational scaled = value * 100;
  std::int64_t pow10 = 1;
  for (int i = 0; i < places; ++i) pow10 *= 10;
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  const Rational shifted = scaled * pow10 + Rational(1, 2);
  const std::int64_t units = shifted.numerator() / shifted.denominator();
  std::string digits = std::to_string(units / pow10);
  std::string frac = std::to_string(units % pow10);
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) digits += "." + frac;
  return (negative ? "-" : "") + digits;
}

}  // namespace extortion
