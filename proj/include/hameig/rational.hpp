#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hameig {

/// Exact rational scalar. All function values, matrix entries and bounds in
/// this library are held exactly; there is no floating point anywhere.
using Rat = mpq_class;

/// Arbitrary-precision integer (bounds, dimensions, subset counts).
using Int = mpz_class;

/// num/den in canonical form. The two-argument mpq_class constructor does
/// not canonicalize and GMP arithmetic requires canonical values, so every
/// ratio built from variables must go through here.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat value(num, den);
    value.canonicalize();
    return value;
}

/// Parses "num", "-num", or "num/den" (base 10). Rejects anything else,
/// including decimal points and zero denominators.
Rat parse_rational(const std::string& text);

/// Canonical "num/den" rendering with den > 0, always including the
/// denominator ("3" serializes as "3/1").
std::string rational_to_string(const Rat& value);

}  // namespace hameig
