#pragma once

/// Exact arbitrary-precision integers and rationals.
///
/// Backed by GMP. Every Rat in the library is kept canonical:
/// gcd(|num|, den) = 1 and den > 0. Construction goes through make_rat
/// or parse_rat, which enforce this; GMP arithmetic preserves it.

#include <gmpxx.h>

#include <string>

#include "trisum/errors.hpp"

namespace trisum {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational from a numerator/denominator pair.
Rat make_rat(Int num, Int den);

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Parses "p", "-p" or "p/q" (decimal). Throws ParseError on malformed
// input and DomainError on a zero denominator.
Rat parse_rat(const std::string& text);

// Parses a decimal integer, throws ParseError on malformed input.
Int parse_int(const std::string& text);

// Canonical text forms: integers render without "/1".
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// base^e for e >= 0.
Int int_pow(const Int& base, unsigned long e);

// base^e over the rationals; negative e inverts (DomainError on 0^negative).
Rat rat_pow(const Rat& base, long e);

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

} // namespace trisum
