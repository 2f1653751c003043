#include "logsurf/bounds.hpp"

#include <functional>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

bool any_unknown(const BoundReport& rep) {
    for (const auto& [name, v] : rep.verdicts)
        if (v == Verdict::Unknown) return true;
    for (const auto& [name, v] : rep.informational)
        if (v == Verdict::Unknown) return true;
    return false;
}

// Evaluate at the requested precision, doubling (twice at most) while any
// interval verdict is still unknown.
BoundReport with_retries(unsigned bits, const std::function<BoundReport(unsigned)>& eval) {
    if (bits == 0) throw InputError("precision must be at least one bit");
    BoundReport rep = eval(bits);
    rep.bits_used = bits;
    for (unsigned b = 2 * bits; any_unknown(rep) && b <= 4 * bits; b *= 2) {
        rep = eval(b);
        rep.bits_used = b;
    }
    return rep;
}

HypothesisStatus met_if(bool ok) { return ok ? HypothesisStatus::Met : HypothesisStatus::Unmet; }

} // namespace

NormalizedInvariants normalized_invariants(const Context& ctx) {
    if (ctx.kd_sq <= 0)
        throw PreconditionError("normalized invariants need (K+D)^2 > 0");
    NormalizedInvariants inv;
    inv.x = ctx.kd_c / ctx.kd_sq;
    inv.sigma = ctx.e_surface / ctx.kd_sq;
    inv.gamma = -ctx.e_curve / (2 * ctx.kd_sq);
    inv.y_sq = inv.x * inv.x - ctx.c_sq / ctx.kd_sq;
    if (inv.y_sq < 0)
        throw ModelInconsistencyError(
            "the part of C orthogonal to K+D has positive square; the pairing violates "
            "the Hodge index theorem");
    return inv;
}

Rational degree_quadratic(const Rational& x, const Rational& sigma, const Rational& gamma) {
    return (sigma - 1) * x * x + (4 * gamma + 3 * sigma - 1) * x -
           2 * gamma * (3 * gamma + 3 * sigma - 1);
}

RationalInterval r_plus_interval(const Rational& sigma, const Rational& gamma,
                                 unsigned precision_bits) {
    if (sigma < Rational(1, 3) || sigma >= 1)
        throw PreconditionError("the root formula needs sigma in [1/3, 1)");
    const Rational rad = 8 * (3 * sigma - 1) * gamma * gamma +
                         8 * sigma * (3 * sigma - 1) * gamma + (3 * sigma - 1) * (3 * sigma - 1);
    if (rad < 0) throw PreconditionError("negative radicand in the root formula");
    const RationalInterval root = sqrt_interval(rad, precision_bits);
    return (RationalInterval(4 * gamma + 3 * sigma - 1) + root) /
           RationalInterval(2 * (1 - sigma));
}

BoundReport degree_bound_general(const Context& ctx, unsigned precision_bits) {
    const Rational q = ctx.kd_sq, e = ctx.e_surface, t = ctx.kd_c;

    return with_retries(precision_bits, [&](unsigned bits) {
        BoundReport rep;
        rep.hypotheses["kd_nef"] = (ctx.assertions.nef || ctx.assertions.big)
                                       ? HypothesisStatus::Asserted
                                       : HypothesisStatus::Unmet;
        rep.hypotheses["kd_sq_positive"] = met_if(q > 0);
        rep.hypotheses["kd_sq_exceeds_euler"] = met_if(q > e);
        rep.hypotheses["curve_not_smooth_boundary_rational"] = met_if(!smooth_boundary_rational(ctx));
        if (q <= 0) return rep;

        rep.hypotheses["sigma_at_least_third"] = met_if(3 * e >= q);
        rep.values["degree"] = t;

        if (q > e && 3 * e - q >= 0) {
            const RationalInterval s = sqrt_interval(2 * q * (3 * e - q), bits);
            const RationalInterval a = (RationalInterval(2 * q) + s) / RationalInterval(q - e);
            const RationalInterval b =
                (RationalInterval(q * (3 * e - q)) + RationalInterval(2 * e) * s) /
                RationalInterval(2 * (q - e));
            rep.intervals["A"] = a;
            rep.intervals["B"] = b;
            const RationalInterval rhs = a * RationalInterval(-ctx.e_curve / 2) + b;
            rep.intervals["degree_bound_rhs"] = rhs;
            rep.verdicts["degree_bound"] = certified_leq(RationalInterval(t), rhs);
        }

        const NormalizedInvariants inv = normalized_invariants(ctx);
        rep.values["x"] = inv.x;
        rep.values["sigma"] = inv.sigma;
        rep.values["gamma"] = inv.gamma;
        rep.values["y_sq"] = inv.y_sq;

        // Diagnostic, not pass/fail: the quadratic is negative on both sides
        // of its root window, and a degree far below the bound lands under
        // the lower root on perfectly good data.
        const Rational p_of_x = degree_quadratic(inv.x, inv.sigma, inv.gamma);
        rep.values["quadratic_in_x"] = p_of_x;
        rep.informational["quadratic_in_x_nonneg"] = p_of_x >= 0 ? Verdict::Holds : Verdict::Fails;

        rep.hypotheses["sigma_below_one"] = met_if(inv.sigma < 1);
        const Rational rad = 8 * (3 * inv.sigma - 1) * inv.gamma * inv.gamma +
                             8 * inv.sigma * (3 * inv.sigma - 1) * inv.gamma +
                             (3 * inv.sigma - 1) * (3 * inv.sigma - 1);
        if (inv.sigma >= Rational(1, 3) && inv.sigma < 1 && rad >= 0) {
            const RationalInterval r_plus = r_plus_interval(inv.sigma, inv.gamma, bits);
            rep.intervals["R_plus"] = r_plus;
            rep.verdicts["x_below_r_plus"] = certified_leq(RationalInterval(inv.x), r_plus);
            rep.verdicts["r_plus_dominates_3gamma"] =
                certified_geq(r_plus, RationalInterval(3 * inv.gamma));
        }
        return rep;
    });
}

BoundReport degree_bound_smooth(const Context& ctx, unsigned precision_bits) {
    const Rational q = ctx.kd_sq, e = ctx.e_surface, t = ctx.kd_c, ec = ctx.e_curve;

    return with_retries(precision_bits, [&](unsigned bits) {
        BoundReport rep;
        rep.hypotheses["kd_nef"] = (ctx.assertions.nef || ctx.assertions.big)
                                       ? HypothesisStatus::Asserted
                                       : HypothesisStatus::Unmet;
        rep.hypotheses["curve_smooth_transverse"] = met_if(ctx.datum.centers.empty());
        rep.hypotheses["curve_not_smooth_boundary_rational"] = met_if(!smooth_boundary_rational(ctx));
        rep.values["degree"] = t;

        const Rational gap = 3 * e - q;
        rep.hypotheses["radicands_nonneg"] = met_if(gap >= 0 && -2 * ec + gap >= 0);
        if (gap >= 0 && -2 * ec + gap >= 0) {
            const RationalInterval s1 = sqrt_interval(gap, bits);
            const RationalInterval s2 = sqrt_interval(-2 * ec + gap, bits);
            const RationalInterval rhs = RationalInterval(Rational(-3, 2) * ec) +
                                         s1 * s2 / RationalInterval(2) +
                                         RationalInterval(gap / 2);
            rep.intervals["degree_bound_rhs"] = rhs;
            rep.verdicts["degree_bound"] = certified_leq(RationalInterval(t), rhs);
        }

        // The bound restated as a quadratic in the degree itself; exact. A
        // degree below the lower root leaves it positive while the bound
        // still holds, so this is a diagnostic, not a pass/fail criterion.
        const Rational quad = 2 * t * t + (6 * ec - 2 * gap) * t - 2 * ec * gap +
                              Rational(9, 2) * ec * ec;
        rep.values["degree_quadratic"] = quad;
        rep.informational["degree_quadratic_nonpos"] = quad <= 0 ? Verdict::Holds : Verdict::Fails;
        return rep;
    });
}

bool ceiling_identity_holds(long t) {
    if (t < 0) throw PreconditionError("the ceiling identity is stated for t >= 0");
    const Int num = Int(t) * t + 3 * (Int(t) + 1);
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), Int(Int(t) + 1).get_mpz_t());
    return c == Int(t) + 3;
}

BoundReport degree_bound_d_rational(const Context& ctx) {
    const Rational q = ctx.kd_sq, e = ctx.e_surface, t = ctx.kd_c;
    BoundReport rep;
    rep.hypotheses["curve_smooth_boundary_rational"] = met_if(smooth_boundary_rational(ctx));
    rep.hypotheses["curve_negative_square"] = met_if(ctx.c_sq < 0);
    rep.values["degree"] = t;

    const Rational bound = 3 * e - q - 3;
    rep.values["degree_bound_rhs"] = bound;
    rep.verdicts["degree_bound"] = t <= bound ? Verdict::Holds : Verdict::Fails;

    const Rational dc = intersect(ctx.base.boundary_divisor(), ctx.curve, ctx.base);
    rep.values["boundary_meets_curve"] = dc;
    if (dc == 0 && t + 2 > 0) {
        const Rational rhs = t * t / (t + 2) - 3 / (t + 2) + 6;
        rep.values["contraction_rhs"] = rhs;
        rep.verdicts["contraction_bound"] = 3 * e - q >= rhs ? Verdict::Holds : Verdict::Fails;
    } else if (dc == 1 && t + 1 > 0) {
        const Rational rhs = t + 3;
        rep.values["contraction_rhs"] = rhs;
        rep.verdicts["contraction_bound"] = 3 * e - q >= rhs ? Verdict::Holds : Verdict::Fails;
        if (is_integer(t) && t >= 0 && t.get_num().fits_slong_p())
            rep.verdicts["ceiling_identity"] = ceiling_identity_holds(t.get_num().get_si())
                                                   ? Verdict::Holds
                                                   : Verdict::Fails;
    }
    return rep;
}

BoundReport p2_corollary(const P2Input& in, unsigned precision_bits) {
    if (in.lambda0 <= Rational(2, 3) || in.lambda0 >= 1)
        throw InputError("lambda0 must lie strictly between 2/3 and 1");
    if (!(in.d >= in.d2 && in.d2 >= in.d1 && in.d1 > 0))
        throw InputError("degrees must satisfy d >= d2 >= d1 > 0");
    if (in.genus < 0) throw InputError("genus must be nonnegative");
    if (in.m < 0) throw InputError("multiplicity must be nonnegative");

    const Rational lambda = frac(in.d1, in.d2);
    const Rational nu = frac(in.d, in.d2);
    const Rational e = Rational(3) + Rational(in.d1) * (in.d1 - 3) + Rational(in.d2) * (in.d2 - 3) +
                       Rational(in.d1) * in.d2;
    const Rational q = Rational(in.d1 + in.d2 - 3) * (in.d1 + in.d2 - 3);

    return with_retries(precision_bits, [&](unsigned bits) {
        BoundReport rep;
        rep.values["lambda"] = lambda;
        rep.values["nu"] = nu;
        rep.values["e_surface"] = e;
        rep.values["kd_sq"] = q;
        rep.values["gap"] = q - e;

        rep.hypotheses["d2_at_least_six"] = met_if(in.d2 >= 6);
        rep.hypotheses["lambda_at_least_cutoff"] = met_if(lambda >= in.lambda0);
        rep.hypotheses["kd_sq_exceeds_euler"] = met_if(q > e);

        const Rational h(4, 9), k(22);
        const Rational threshold = (h * in.genus + k) / ((in.lambda0 / 2 - Rational(1, 3)) *
                                                         (in.lambda0 / 2 + Rational(1, 4)));
        rep.values["nu_threshold"] = threshold;
        rep.hypotheses["nu_above_threshold"] = met_if(nu > threshold);

        const Rational denom = lambda / 2 - Rational(1, 3);
        if (denom > 0) {
            const Rational lp1 = lambda + 1;
            const Rational inner = 2 * (2 * lambda * lambda + lambda + 2);
            const RationalInterval root = sqrt_interval(inner, bits);
            const RationalInterval a =
                (RationalInterval(2 * lp1 * lp1) + RationalInterval(lp1) * root) /
                RationalInterval(denom);
            const RationalInterval b =
                (RationalInterval(lp1 * lp1 * inner / 2) +
                 RationalInterval((lambda * lambda + lambda + 1) * lp1) * root) /
                RationalInterval(2 * denom);
            rep.intervals["a_lambda"] = a;
            rep.intervals["b_lambda"] = b;

            const Rational linear = 50 / denom;
            rep.values["m_bound"] = floor(linear);
            rep.verdicts["multiplicity_bound"] =
                Rational(in.m) <= floor(linear) ? Verdict::Holds : Verdict::Fails;
            rep.verdicts["a_lambda_linear_domination"] = certified_leq(
                RationalInterval(lambda + 1) * a / RationalInterval(lambda + Rational(1, 2)),
                RationalInterval(linear));
        }
        return rep;
    });
}

} // namespace logsurf
