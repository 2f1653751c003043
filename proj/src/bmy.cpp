#include "logsurf/bmy.hpp"

#include <algorithm>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

Rational alpha_sq(const Rational& alpha) { return alpha * alpha; }

std::string center_name(const ResolvedGeometry& g, std::size_t i) { return g.exceptional[i]; }

} // namespace

Context make_context(SurfaceModel base, ResolutionDatum datum, Divisor curve, Assertions assertions) {
    Context ctx;
    ctx.geom = build_resolved_lattice(base, datum, curve);
    ctx.adjunction = check_adjunction(base, datum, curve);

    const Divisor kd = base.canonical() + base.boundary_divisor();
    ctx.kd_sq = intersect(kd, kd, base);
    ctx.kd_c = intersect(kd, curve, base);
    ctx.c_sq = intersect(curve, curve, base);
    ctx.e_surface = euler_open_surface(base);
    ctx.e_curve = euler_open_curve(ctx.geom);

    ctx.base = std::move(base);
    ctx.datum = std::move(datum);
    ctx.curve = std::move(curve);
    ctx.assertions = std::move(assertions);
    return ctx;
}

ChernData chern_data(const Context& ctx, const Rational& alpha) {
    if (alpha < 0 || alpha > 1) throw InputError("alpha must lie in [0,1]");
    if (!ctx.adjunction.equal)
        throw InconsistentDatumError("scenario fails the adjunction identity by " +
                                     to_string(ctx.adjunction.difference) +
                                     "; genus or multiplicities are wrong");

    const ResolvedGeometry& g = ctx.geom;
    ChernData cd;
    cd.alpha = alpha;

    cd.c2_norm = ctx.e_surface - alpha * ctx.e_curve;
    for (std::size_t i : g.interior) cd.c2_norm += alpha * Rational(g.m[i]) - 1;
    for (std::size_t j : g.near_interior)
        cd.c2_norm -= alpha * Rational(g.m[j] * g.satellite[j]);

    cd.c1sq_norm = ctx.kd_sq + 2 * alpha * ctx.kd_c + alpha_sq(alpha) * ctx.c_sq;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        const Rational t = Rational(g.x[i]) - alpha * Rational(g.m[i]);
        cd.c1sq_norm -= t * t;
    }

    cd.d_alpha = ctx.base.canonical() + ctx.base.boundary_divisor() + alpha * ctx.curve;
    for (std::size_t i = 0; i < g.x.size(); ++i)
        cd.d_alpha.add(center_name(g, i), Rational(g.x[i]) - alpha * Rational(g.m[i]));

    if (intersect(cd.d_alpha, cd.d_alpha, g.model) != cd.c1sq_norm)
        throw InvariantViolationError("c1^2 disagrees with the self-intersection of its divisor");
    return cd;
}

namespace {

// Effectivity of d_alpha cannot be read off its coordinates (exceptional
// coefficients are legitimately negative). Certify it instead: d_alpha is
// numerically pullback(K+D) + sum x_i Ebar_i + alpha * (strict transform of
// C), and the last two pieces are effective curves, so an effective
// representative of K+D settles it.
HypothesisStatus establish_d_alpha_effective(const Context& ctx, const Divisor& d_alpha) {
    const Divisor kd = ctx.base.canonical() + ctx.base.boundary_divisor();
    bool have_representative = false;
    if (ctx.assertions.kplusd_effective) {
        const Divisor& rep = *ctx.assertions.kplusd_effective;
        if (!is_effective(rep))
            throw InputError("the supplied representative of K+D is not effective");
        const Divisor diff = rep - kd;
        for (const auto& cls : ctx.base.classes())
            if (intersect(diff, Divisor::unit(cls), ctx.base) != 0)
                throw InputError("the supplied representative is not numerically equivalent to K+D");
        have_representative = true;
    }
    if (have_representative || is_effective(d_alpha) || is_effective(kd))
        return HypothesisStatus::Met;
    if (ctx.assertions.kappa_nonneg) return HypothesisStatus::Asserted;
    throw PreconditionError(
        "cannot establish that d_alpha is effective: supply an effective representative "
        "of K+D or assert kappa_nonneg");
}

} // namespace

ReductionData reduction_data(const Context& ctx, const ChernData& chern) {
    const ResolvedGeometry& g = ctx.geom;
    ReductionData red;
    red.d_alpha_effective = establish_d_alpha_effective(ctx, chern.d_alpha);

    const auto first = zariski_support_on(chern.d_alpha, reduction_cycle(g), g.model,
                                          Effectivity::CertifiedExternally);
    red.n_alpha = first.negative;
    red.p_alpha = first.positive;
    red.n_alpha_sq = intersect(red.n_alpha, red.n_alpha, g.model);
    for (std::size_t j : g.boundary) red.b[center_name(g, j)] = red.n_alpha.coeff(center_name(g, j));
    for (std::size_t j : g.near_interior)
        red.b[center_name(g, j)] = red.n_alpha.coeff(center_name(g, j));
    for (std::size_t j : g.near_boundary)
        red.b[center_name(g, j)] = red.n_alpha.coeff(center_name(g, j));

    const auto second =
        zariski_support_on(red.p_alpha, full_cycle(g), g.model, Effectivity::CertifiedExternally);
    red.n_hat = second.negative;
    for (std::size_t i = 0; i < g.exceptional.size(); ++i)
        red.b_hat[center_name(g, i)] = red.n_hat.coeff(center_name(g, i));

    std::vector<CurveComponent> universe = full_cycle(g);
    for (const auto& [cls, coeff] : red.p_alpha.coefficients())
        if (ctx.base.has_class(cls)) universe.push_back({cls, Divisor::unit(cls)});
    const auto absolute =
        zariski_absolute_on(red.p_alpha, universe, g.model, Effectivity::CertifiedExternally);
    red.n_bar = absolute.negative;
    red.n_bar_sq = intersect(red.n_bar, red.n_bar, g.model);
    return red;
}

Rational principal_lhs(const ChernData& chern, const ReductionData& red) {
    return 3 * chern.c2_norm - chern.c1sq_norm + red.n_alpha_sq + Rational(1, 4) * red.n_bar_sq;
}

Rational QuadraticForm::value(const Rational& alpha) const {
    return alpha * alpha * Rational(1, 2) * b3 - 2 * alpha * b1 + b0;
}

QuadraticForm main_quadratic_form(const Context& ctx) {
    QuadraticForm q;
    q.b3 = ctx.c_sq + 3 * ctx.kd_c + 3 * ctx.e_curve;
    q.b1 = ctx.kd_c + Rational(3, 2) * ctx.e_curve;
    q.b0 = 3 * ctx.e_surface - ctx.kd_sq;
    return q;
}

Rational main_quadratic(const Context& ctx, const Rational& alpha) {
    if (alpha < 0 || alpha > 1) throw InputError("alpha must lie in [0,1]");
    return main_quadratic_form(ctx).value(alpha);
}

bool smooth_boundary_rational(const Context& ctx) {
    if (ctx.datum.genus != 0 || !ctx.datum.centers.empty()) return false;
    const Rational dc = intersect(ctx.base.boundary_divisor(), ctx.curve, ctx.base);
    return dc <= 1;
}

DiscriminantReport discriminant_inequality(const Context& ctx) {
    const QuadraticForm q = main_quadratic_form(ctx);
    DiscriminantReport rep;
    rep.lhs = 2 * q.b1 * q.b1 - q.b0 * q.b3;
    rep.verdict = rep.lhs <= 0 ? Verdict::Holds : Verdict::Fails;

    rep.hypotheses["curve_not_smooth_boundary_rational"] =
        smooth_boundary_rational(ctx) ? HypothesisStatus::Unmet : HypothesisStatus::Met;
    rep.hypotheses["canonical_degree_lower_bound"] =
        ctx.kd_c >= Rational(-3, 2) * ctx.e_surface ? HypothesisStatus::Met : HypothesisStatus::Unmet;
    rep.hypotheses["euler_below_canonical_square"] =
        (ctx.kd_sq > 0 && ctx.e_surface < ctx.kd_sq) ? HypothesisStatus::Met
                                                     : HypothesisStatus::Unmet;
    rep.hypotheses["kd_nef"] = (ctx.assertions.nef || ctx.assertions.big)
                                   ? HypothesisStatus::Asserted
                                   : HypothesisStatus::Unmet;
    rep.hypotheses["kd_big"] = (ctx.kd_sq > 0 && ctx.assertions.big) ? HypothesisStatus::Asserted
                                                                     : HypothesisStatus::Unmet;

    if (q.b3 != 0) {
        rep.alpha0_defined = true;
        rep.alpha0 = 2 * q.b1 / q.b3;
        rep.alpha0_in_unit_interval = rep.alpha0 >= 0 && rep.alpha0 <= 1;
    }
    rep.hypotheses["alpha0_in_unit_interval"] =
        rep.alpha0_defined && rep.alpha0_in_unit_interval ? HypothesisStatus::Met
                                                          : HypothesisStatus::Unmet;
    return rep;
}

ChainReport chain_validators(const Context& ctx, const ChernData& chern, const ReductionData& red) {
    const ResolvedGeometry& g = ctx.geom;
    const Rational& alpha = chern.alpha;
    ChainReport rep;

    auto add_check = [&rep](std::string name, Rational lhs, Rational rhs) {
        rep.checks.push_back({std::move(name), lhs, rhs, lhs <= rhs});
    };

    auto xm = [&](std::size_t i) -> Rational { return Rational(g.x[i]) - alpha * Rational(g.m[i]); };

    for (const auto& [name, b] : red.b) {
        const std::size_t i = g.model.index(name) - ctx.base.classes().size();
        add_check("lower bound b[" + name + "]", xm(i), b);
    }
    for (std::size_t i : g.interior)
        add_check("lower bound b_hat[" + center_name(g, i) + "]", xm(i),
                  red.b_hat.at(center_name(g, i)));

    const Rational a2 = alpha * alpha;
    for (std::size_t i : g.boundary) {
        const Rational b = red.b.at(center_name(g, i));
        add_check("boundary center " + center_name(g, i), xm(i) * xm(i) - b * b,
                  a2 * Rational(g.m[i] * (g.m[i] - g.x[i])));
    }
    for (std::size_t j : g.near_interior) {
        const Rational b = red.b.at(center_name(g, j));
        add_check("near-interior center " + center_name(g, j),
                  Rational(-3) * alpha * Rational(g.m[j] * g.satellite[j]) + xm(j) * xm(j) - b * b,
                  a2 * Rational(g.m[j] * (g.m[j] - 1)));
    }
    for (std::size_t j : g.near_boundary) {
        const Rational b = red.b.at(center_name(g, j));
        add_check("near-boundary center " + center_name(g, j), xm(j) * xm(j) - b * b,
                  a2 * Rational(g.m[j] * (g.m[j] - 1 + g.satellite[j] + g.delta[j])));
    }

    rep.route_bundle = 3 * chern.c2_norm - chern.c1sq_norm + red.n_alpha_sq;
    rep.route_centers = 3 * ctx.e_surface - ctx.kd_sq -
                        2 * alpha * (ctx.kd_c + Rational(3, 2) * ctx.e_curve) - a2 * ctx.c_sq;
    for (std::size_t i : g.interior)
        rep.route_centers += 3 * (alpha * Rational(g.m[i]) - 1) + xm(i) * xm(i);
    for (std::size_t i : g.boundary) {
        const Rational b = red.b.at(center_name(g, i));
        rep.route_centers += xm(i) * xm(i) - b * b;
    }
    for (std::size_t j : g.near_interior) {
        const Rational b = red.b.at(center_name(g, j));
        rep.route_centers +=
            Rational(-3) * alpha * Rational(g.m[j] * g.satellite[j]) + xm(j) * xm(j) - b * b;
    }
    for (std::size_t j : g.near_boundary) {
        const Rational b = red.b.at(center_name(g, j));
        rep.route_centers += xm(j) * xm(j) - b * b;
    }
    rep.identity_equal = rep.route_bundle == rep.route_centers;

    rep.principal = principal_lhs(chern, red);
    rep.quadratic = main_quadratic(ctx, alpha);
    add_check("principal below quadratic", rep.principal, rep.quadratic);
    if (ctx.assertions.nef && ctx.assertions.big)
        add_check("principal nonnegative", Rational(0), rep.principal);

    rep.all_hold = rep.identity_equal &&
                   std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const InequalityCheck& c) { return c.holds; });
    return rep;
}

bool interior_point_bound(long m, const Rational& alpha) {
    if (m < 2) throw PreconditionError("the bound needs multiplicity at least 2");
    if (alpha < 0 || alpha > 1) throw InputError("alpha must lie in [0,1]");
    const Rational am = alpha * Rational(m);
    Rational cut = Rational(2) - am;
    if (cut < 0) cut = 0;
    const Rational lhs = 4 * (1 - am + am * am) - cut * cut;
    return lhs <= 6 * alpha * alpha * Rational(m * (m - 1));
}

} // namespace logsurf
