#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ospbi {

/// Exact arbitrary-precision rational. GMP keeps it canonical: lowest terms,
/// positive denominator.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p", "-p", "p/q" or a finite decimal such as "0.25" exactly.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

} // namespace ospbi
