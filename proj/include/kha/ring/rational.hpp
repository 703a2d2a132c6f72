#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kha::ring {

/// Arbitrary-precision rational. GMP keeps mpq values canonical
/// (positive denominator, reduced) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "p" or "p/q" with an optional leading sign; the result is reduced.
Rational parse_rational(std::string_view text);

/// Always "p/q", e.g. "1/1", "-3/2". This is the wire format for coefficients.
std::string format_rational(const Rational& q);

}  // namespace kha::ring
