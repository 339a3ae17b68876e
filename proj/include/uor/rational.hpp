#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace uor {

/// Exact rational scalar used for every payoff, weight, and probability.
/// All arithmetic in the library is exact; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical form: reduced, integer printed without "/1".
std::string to_string(const Rational& value);

}  // namespace uor
