#include "itg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace itg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Signed decimal integer -> BigInt. The sign must be leading and single.
BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  BigInt value{std::string(s)};
  return negative ? -value : value;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(text, text));
  }
  BigInt p = parse_integer(text.substr(0, slash), text);
  std::string_view denom = text.substr(slash + 1);
  if (!all_digits(denom))
    throw std::invalid_argument("denominator must be a positive integer: '" +
                                std::string(text) + "'");
  BigInt q{std::string(denom)};
  if (q == 0)
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rat(p, q);
}

std::string format_rational(const Rat& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

BigInt common_denominator(const std::vector<Rat>& values) {
  BigInt l = 1;
  for (const Rat& v : values) l = boost::multiprecision::lcm(l, den(v));
  return l;
}

}  // namespace itg
