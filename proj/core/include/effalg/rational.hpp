#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace effalg {

// Exact rationals. All state-space and fuzzy-model arithmetic goes through this type.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and unreduced
// values compare unequal to their reduced form.
Rational fraction(long num, long den);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace effalg
