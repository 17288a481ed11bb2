#pragma once

#include <array>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace splinedim {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of the domain, with exact coordinates.
using Point3 = std::array<Rational, 3>;

/// Parses `int` or `int/int` (optional leading sign, nonzero denominator).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view token);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace splinedim
