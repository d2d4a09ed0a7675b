#pragma once

#include <gmpxx.h>

#include <string>

namespace lll {

using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "3/4", "2", or a plain decimal like "0.25" into an exact rational.
// Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

// Canonical "num/den" form ("num" when the denominator is 1).
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

}  // namespace lll
