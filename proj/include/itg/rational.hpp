#pragma once

// Exact rational arithmetic for the whole library. Every probability,
// utility, and solver coefficient is a Rat; doubles appear only in final
// reporting (simulation means, CSV rendering).

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace itg {

using BigInt = boost::multiprecision::cpp_int;
// Canonical form is maintained by the backend: lowest terms, denominator > 0.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Parses "p/q" or "p" with optional leading sign. Rejects decimals, empty
// input, zero denominators, and trailing junk (throws std::invalid_argument).
Rat parse_rational(std::string_view text);

// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rat& r);

double to_double(const Rat& r);

// Least common multiple of the denominators (1 for an empty list).
BigInt common_denominator(const std::vector<Rat>& values);

}  // namespace itg
