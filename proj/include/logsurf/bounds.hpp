#pragma once

#include <map>
#include <string>

#include "logsurf/bmy.hpp"
#include "logsurf/interval.hpp"

namespace logsurf {

// Per-(K+D)^2 invariants of a scenario. Only defined when (K+D)^2 > 0.
struct NormalizedInvariants {
    Rational x;      // (K+D).C / (K+D)^2
    Rational sigma;  // e_surface / (K+D)^2
    Rational gamma;  // -e_curve / (2 (K+D)^2)
    Rational y_sq;   // x^2 - C^2/(K+D)^2, the square of the orthogonal part
};

// Throws PreconditionError when (K+D)^2 <= 0 and ModelInconsistencyError
// when y_sq < 0 (the pairing then violates the Hodge index theorem, so the
// data describe no surface).
NormalizedInvariants normalized_invariants(const Context& ctx);

// Result of a bound evaluation: named hypotheses, named certified verdicts,
// the radical-bearing quantities as intervals, and the exact scalars worth
// echoing. Interval verdicts retry at doubled precision (up to 4x the
// requested bits) before reporting unknown.
struct BoundReport {
    std::map<std::string, HypothesisStatus> hypotheses;
    std::map<std::string, Verdict> verdicts;
    // Diagnostics that do not bear on whether the bound holds (a quadratic
    // restatement is positive below its lower root, for instance).
    std::map<std::string, Verdict> informational;
    std::map<std::string, RationalInterval> intervals;
    std::map<std::string, Rational> values;
    unsigned bits_used = 0;
};

// The normalized degree quadratic
//   P(x) = (sigma-1) x^2 + (4 gamma + 3 sigma - 1) x - 2 gamma (3 gamma + 3 sigma - 1),
// nonnegative at x for every real scenario.
Rational degree_quadratic(const Rational& x, const Rational& sigma, const Rational& gamma);

// Enclosure of the larger root
//   R_plus = (4 gamma + (3 sigma - 1) + sqrt(8(3s-1)g^2 + 8s(3s-1)g + (3s-1)^2)) / (2(1-sigma)).
// Exact (a point interval) whenever the radicand is a perfect square.
// Throws PreconditionError unless sigma in [1/3, 1) and the radicand is
// nonnegative.
RationalInterval r_plus_interval(const Rational& sigma, const Rational& gamma,
                                 unsigned precision_bits);

// Degree bound depending only on (K+D)^2 and e_surface:
//   (K+D).C <= A * (-e_curve/2) + B
// with A = (2q + sqrt(2q(3e-q)))/(q-e), B = (q(3e-q) + 2e sqrt(2q(3e-q)))/(2(q-e)),
// plus the normalized form: P(x) >= 0 and x <= R_plus(sigma, gamma).
BoundReport degree_bound_general(const Context& ctx, unsigned precision_bits);

// Sharper bound for C smooth and transverse to the boundary (no centers):
//   t <= -(3/2) e_curve + sqrt(3e-q) sqrt(-2 e_curve + 3e-q)/2 + (3e-q)/2,
// together with the exact quadratic-in-t form of the same statement.
BoundReport degree_bound_smooth(const Context& ctx, unsigned precision_bits);

// Bound for C a smooth rational curve meeting the boundary at most once,
// with C^2 < 0: t <= 3e - q - 3, plus the two contraction branches.
BoundReport degree_bound_d_rational(const Context& ctx);

// ceil(t^2/(t+1) + 3) == t + 3, exactly, for integers t >= 0.
bool ceiling_identity_holds(long t);

// The P^2 pipeline: boundary of degrees d1 <= d2, curve of degree d and
// genus g, and the minimal multiplicity m over the boundary preimage.
// lambda0 configures the lower cutoff for lambda = d1/d2 and must lie in
// (2/3, 1).
struct P2Input {
    long d1 = 0, d2 = 0, d = 0;
    long genus = 0;
    long m = 0;
    Rational lambda0 = Rational(7, 10);
};

// Throws InputError on degree-ordering violations or a lambda0 outside
// (2/3, 1); everything else lands in the hypothesis ledger.
BoundReport p2_corollary(const P2Input& in, unsigned precision_bits);

} // namespace logsurf
