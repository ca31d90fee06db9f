#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperjump {

using Rational = mpq_class;

/// "p/q" in lowest terms ("p" when the denominator is 1).
std::string to_string(const Rational& value);

/// Parses "p/q" or an integer; throws FormatError on anything else.
Rational parse_rational(std::string_view text);

/// Best rational approximation of `value` among continued-fraction
/// convergents whose denominator does not exceed `max_denominator`.
Rational nearest_convergent(double value, std::uint64_t max_denominator);

Rational binomial(unsigned n, unsigned k);

}  // namespace hyperjump
