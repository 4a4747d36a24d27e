#pragma once

#include <gmpxx.h>

#include <string>

namespace dqp {

using Rational = mpq_class;
using BigInt = mpz_class;

// Lowest terms, positive denominator: "p" when the denominator is 1,
// otherwise "p/q".
std::string rational_to_string(const Rational& r);

// Accepts "p" and "p/q"; throws ParseError on malformed input or zero
// denominator.
Rational rational_from_string(const std::string& s);

} // namespace dqp
