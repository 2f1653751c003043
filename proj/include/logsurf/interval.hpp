#pragma once

#include <string>

#include "logsurf/rational.hpp"

namespace logsurf {

// Outcome of an inequality check. Unknown means an enclosing interval
// straddled the comparison point at the precision in force.
enum class Verdict { Holds, Fails, Unknown };

// Status of a theorem hypothesis: checked and true, checked and false, or
// taken on the user's word because it is not decidable from lattice data.
enum class HypothesisStatus { Met, Unmet, Asserted };

std::string to_string(Verdict v);
std::string to_string(HypothesisStatus s);

// Closed interval with exact rational endpoints. Field operations are exact
// (endpoint arithmetic introduces no rounding); only square roots widen.
// Every operation preserves containment of the true real value.
struct RationalInterval {
    Rational lo, hi;

    RationalInterval() : lo(0), hi(0) {}
    RationalInterval(const Rational& v) : lo(v), hi(v) {}
    RationalInterval(Rational l, Rational h);

    bool point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
// Throws PreconditionError when the divisor interval contains zero.
RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);

// a <= b in the certified sense: Holds when every pair of represented values
// satisfies it, Fails when none does, Unknown otherwise.
Verdict certified_leq(const RationalInterval& a, const RationalInterval& b);
Verdict certified_geq(const RationalInterval& a, const RationalInterval& b);

// Enclosure of sqrt(v) with lo^2 <= v <= hi^2 and
// hi - lo <= 2^-precision * max(1, hi). Exact when v is a perfect square of
// a rational with denominator dividing the working power of two. Throws
// PreconditionError for negative v.
RationalInterval sqrt_interval(const Rational& v, unsigned precision_bits);

} // namespace logsurf
