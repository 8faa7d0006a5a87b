#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qgraph {

/// Exact rational number; mpq_class keeps numerator/denominator coprime with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

}  // namespace qgraph
