#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hermite {

using Integer = mpz_class;

// Exact rational, always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rat = mpq_class;

Rat make_rat(const Integer& num, const Integer& den);

// Accepts "a", "a/b", and decimal forms like "-1.25" or "1e-12".
Rat parse_rat(std::string_view text);

// "num/den", or just "num" for integers.
std::string to_string(const Rat& x);
std::string to_string(const Integer& x);

// Decimal rendering rounded to `significant` digits (scientific when the
// exponent is far from zero).
std::string to_decimal(const Rat& x, int significant = 10);

Integer floor(const Rat& x);
Integer ceil(const Rat& x);
int sign(const Rat& x);
int sign(const Integer& x);
Rat pow(const Rat& x, unsigned n);
Integer pow(const Integer& x, unsigned n);

}  // namespace hermite
