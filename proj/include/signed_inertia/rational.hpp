#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace signed_inertia {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms; den must be nonzero.
Rational ratio(long num, long den);

/// Parses "3", "-1", "7/2", "-4/9". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" with the "/q" omitted when q == 1.
std::string to_string(const Rational& value);

/// Always "p/q" (also for integers); used for JSON payloads.
std::string to_fraction_string(const Rational& value);

int sign(const Rational& value);

/// Nearest-double approximation, for plotting only.
double to_double(const Rational& value);

/// Exact rational value of a finite double.
Rational from_double(double value);

}  // namespace signed_inertia
