#pragma once

#include <gmpxx.h>

#include <string>

namespace fiblcm {

// Reduced arbitrary-precision fraction with positive denominator.  All
// values are produced through mpq arithmetic (which canonicalizes) or
// through make_rational below, so the invariant holds everywhere.
using Rational = mpq_class;

Rational make_rational(long num, long den);

// "p/q" with both parts reduced; integers render as "p/1".
std::string fraction_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace fiblcm
