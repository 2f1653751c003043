#include "logsurf/interval.hpp"

#include <algorithm>

#include "logsurf/errors.hpp"

namespace logsurf {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::Met: return "met";
        case HypothesisStatus::Unmet: return "unmet";
        case HypothesisStatus::Asserted: return "asserted";
    }
    return "unmet";
}

RationalInterval::RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw PreconditionError("interval endpoints out of order");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    if (b.lo <= 0 && b.hi >= 0) throw PreconditionError("division by an interval containing zero");
    const Rational p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Verdict certified_leq(const RationalInterval& a, const RationalInterval& b) {
    if (a.hi <= b.lo) return Verdict::Holds;
    if (a.lo > b.hi) return Verdict::Fails;
    return Verdict::Unknown;
}

Verdict certified_geq(const RationalInterval& a, const RationalInterval& b) {
    return certified_leq(b, a);
}

RationalInterval sqrt_interval(const Rational& v, unsigned precision_bits) {
    if (v < 0) throw PreconditionError("square root of a negative value");
    if (v == 0) return {};

    // sqrt(p/q) = sqrt(p q) / q. Scale p q by 4^k so the integer square root
    // carries k extra bits, then divide back by q 2^k. Flooring the integer
    // root keeps lo^2 <= v; bumping by one when inexact keeps v <= hi^2.
    const Int& p = v.get_num();
    const Int& q = v.get_den();
    Int scaled = p * q;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * precision_bits);
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());

    Int den = q;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), precision_bits);
    Rational lo(root, den);
    lo.canonicalize();
    if (rem == 0) return {lo, lo};
    Rational hi(root + 1, den);
    hi.canonicalize();
    return {lo, hi};
}

} // namespace logsurf
