#pragma once

#include <gmpxx.h>

#include <string>

namespace exdisc {

// Exact rational scalar used throughout the library. Arithmetic on canonical
// values stays canonical; construction goes through rat()/parse_rational so
// the non-canonicalizing two-argument mpq_class constructor is never exposed.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Accepts "p/q", plain integers, and exact decimal strings ("0.3" -> 3/10,
// "-1.25" -> -5/4). Throws Error(Errc::parse_error) on malformed input.
Rational parse_rational(const std::string& text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

bool is_integer(const Rational& r);

// A rational with minimal denominator in the open interval (lo, hi)
// (Stern-Brocot descent). Requires lo < hi.
Rational simplest_in_interval(const Rational& lo, const Rational& hi);

}  // namespace exdisc
