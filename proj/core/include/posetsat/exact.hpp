#pragma once

// Exact integer and rational arithmetic used throughout the library.
//
// Counts, probabilities and weights are never rounded. Floating point only
// shows up in display fields of reports.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace posetsat {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Sum_{r=0}^{j} C(n, r), with j clamped to [.., n]. Zero when j < 0.
Integer binomial_at_most(long n, long j);

Integer power(long base, unsigned long exponent);

/// Decimal digits of an integer.
std::string to_string(const Integer& value);

/// Always "p/q" with q >= 1 in lowest terms, e.g. "0/1", "1/3", "-2/1".
std::string fraction_string(const Rational& value);

/// Accepts "p/q", an integer, or a finite decimal such as "0.25" (converted exactly).
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

Rational make_rational(const Integer& num, const Integer& den);

/// Certified upper bound on log2(x) for x >= 1, returned as an exact dyadic
/// rational a / 2^fraction_bits. The bound is checked by exact integer
/// arithmetic, so 2^(result) >= x always holds.
Rational log2_upper(const Integer& x, unsigned fraction_bits = 12);

/// Certified lower bound counterpart of log2_upper.
Rational log2_lower(const Integer& x, unsigned fraction_bits = 12);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

}  // namespace posetsat
