#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace logbb {

/// Exact rational coefficients. Backed by GMP; mpq_class keeps values
/// canonical (gcd(|num|, den) = 1, den > 0) through arithmetic.
using Rat = mpq_class;

/// n/d with canonicalization. d must be nonzero.
Rat rat(long n, long d = 1);

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
/// Throws ParseError on malformed input.
Rat rat_parse(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& q);

Rat rat_pow(const Rat& base, unsigned long e);

/// Integer power n^e as a Rat (e ≥ 0).
Rat rat_ipow(long n, unsigned long e);

} // namespace logbb
