#pragma once

#include <gmpxx.h>

#include <string>

namespace gfn {

/// Exact rational scalar used for weights, dimensions and all power counting.
/// Arithmetic keeps the canonical gcd-reduced, positive-denominator form.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (arbitrary precision). Throws ParseError on
/// anything else, including a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text: "p" or "p/q" with q > 1.
std::string to_string(const Rational& q);

/// Largest integer <= q.
long floor_long(const Rational& q);

bool is_integer(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

Rational pow_rational(const Rational& base, int exponent);

} // namespace gfn
