#include "afpg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace afpg {

std::string to_string(const Rational& r) {
  const auto num = r.numerator();
  const auto den = r.denominator();
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

using Int = boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw std::invalid_argument("empty number");
  if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
    throw std::invalid_argument("malformed number: " + std::string(s));
  // cpp_int treats a leading zero as an octal prefix.
  std::string digits = std::string(whole) + std::string(frac);
  const auto nz = digits.find_first_not_of('0');
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  Int num(digits);
  Int den = boost::multiprecision::pow(Int(10), static_cast<unsigned>(frac.size()));
  Rational r(num, den);
  return negative ? -r : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return num / den;
}

}  // namespace afpg
