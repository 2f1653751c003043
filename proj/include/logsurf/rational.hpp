#pragma once

#include <gmpxx.h>

#include <string>

#include "logsurf/errors.hpp"

namespace logsurf {

// All arithmetic in this library is exact. Rationals are GMP mpq with the
// canonical-form invariant (reduced, positive denominator) maintained by the
// mpq_class operators.
using Int = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "p/q" with arbitrary-precision integers. Rejects
// anything else, in particular decimal points and exponents: callers that
// accept user data rely on this to keep floating point out of the pipeline.
Rational parse_rational(const std::string& text);

// num/den reduced to canonical form. The two-argument mpq_class constructor
// stores its operands verbatim, which silently breaks comparisons whenever
// they share a factor; route any computed numerator/denominator pair through
// here.
Rational frac(const Int& num, const Int& den);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

// Largest integer <= value / smallest integer >= value.
Int floor(const Rational& value);
Int ceil(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

inline int sign(const Rational& value) { return sgn(value); }

// value^2, convenience for the many squared terms in the evaluators.
inline Rational square(const Rational& value) { return value * value; }

} // namespace logsurf
