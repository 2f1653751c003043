#include "logsurf/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

int stage_rank(Stage s) {
    switch (s) {
        case Stage::Interior: return 0;
        case Stage::Boundary: return 1;
        case Stage::NearInterior: return 2;
        case Stage::NearBoundary: return 3;
    }
    throw InputError("unknown stage tag");
}

bool early_stage(Stage s) { return s == Stage::Interior || s == Stage::Boundary; }

std::string center_label(std::size_t i) { return "center " + std::to_string(i + 1); }

} // namespace

int satellite_excess(const BlowupCenter& c) { return c.proximity.size() == 2 ? 1 : 0; }

void validate(const ResolutionDatum& datum) {
    if (datum.genus < 0) throw InputError("genus must be nonnegative");
    const auto& cs = datum.centers;

    int rank = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const int r = stage_rank(cs[i].stage);
        if (r < rank)
            throw InputError(center_label(i) + ": stage blocks must appear in order "
                             "interior, boundary, near-interior, near-boundary");
        rank = r;
    }

    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto& c = cs[i];
        if (c.m < 0) throw InputError(center_label(i) + ": multiplicity must be nonnegative");
        if (c.delta < 0)
            throw InputError(center_label(i) + ": boundary multiplicity must be nonnegative");

        switch (c.stage) {
            case Stage::Interior:
                if (c.m < 2)
                    throw InputError(center_label(i) +
                                     ": an interior center is a singular point, multiplicity >= 2");
                if (c.delta != 0)
                    throw InputError(center_label(i) + ": interior centers lie off the boundary");
                break;
            case Stage::Boundary:
                if (c.delta != 1 && c.delta != 2)
                    throw InputError(center_label(i) +
                                     ": a boundary center meets one or two boundary branches");
                break;
            case Stage::NearInterior:
                if (c.delta != 0)
                    throw InputError(center_label(i) +
                                     ": near-interior centers lie off the boundary");
                break;
            case Stage::NearBoundary:
                break;
        }

        if (early_stage(c.stage)) {
            if (!c.proximity.empty())
                throw InputError(center_label(i) + ": early centers lie on no exceptional curve");
            continue;
        }
        if (c.proximity.size() != 1 && c.proximity.size() != 2)
            throw InputError(center_label(i) +
                             ": an infinitely near center lies on one or two exceptional curves");
        std::set<std::size_t> seen;
        for (std::size_t p : c.proximity) {
            if (p == 0 || p > i)
                throw InputError(center_label(i) + ": proximity must name a strictly earlier center");
            if (!seen.insert(p).second)
                throw InputError(center_label(i) + ": repeated proximity entry");
            const Stage ps = cs[p - 1].stage;
            const bool interior_side = c.stage == Stage::NearInterior;
            const bool match = interior_side
                                   ? (ps == Stage::Interior || ps == Stage::NearInterior)
                                   : (ps == Stage::Boundary || ps == Stage::NearBoundary);
            if (!match)
                throw InputError(center_label(i) +
                                 ": proximity crosses between the interior and boundary families");
        }
    }

    // A satellite center sits on the intersection of two exceptional curves.
    // Those curves must meet (the later one was centered on the earlier one),
    // and blowing the intersection up separates them, so no second satellite
    // can use the same pair.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_uses;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].proximity.size() != 2) continue;
        std::size_t a = cs[i].proximity[0], b = cs[i].proximity[1];
        if (a > b) std::swap(a, b);
        const auto& earlier = cs[b - 1].proximity;
        if (std::find(earlier.begin(), earlier.end(), a) == earlier.end())
            throw InputError(center_label(i) + ": satellite point on two curves that never meet");
        if (++pair_uses[{a, b}] > 1)
            throw InputError(center_label(i) +
                             ": two satellite centers on the same pair of exceptional curves");
    }
}

std::vector<long> derive_discrepancies(const ResolutionDatum& datum) {
    validate(datum);
    std::vector<long> x;
    x.reserve(datum.centers.size());
    for (std::size_t i = 0; i < datum.centers.size(); ++i) {
        const auto& c = datum.centers[i];
        long xi = 0;
        switch (c.stage) {
            case Stage::Interior: xi = 2; break;
            case Stage::Boundary: xi = 2 - c.delta; break;
            case Stage::NearInterior:
            case Stage::NearBoundary: xi = 1 - satellite_excess(c) - c.delta; break;
        }
        if (xi < 0)
            throw InconsistentDatumError(
                center_label(i) + ": derived exceptional coefficient " + std::to_string(xi) +
                " is negative; no blow-up sequence produces this datum");
        x.push_back(xi);
    }
    return x;
}

ResolvedGeometry build_resolved_lattice(const SurfaceModel& base,
                                        const ResolutionDatum& datum,
                                        const Divisor& curve_class) {
    const std::vector<long> x = derive_discrepancies(datum);
    for (const auto& [cls, c] : curve_class.coefficients())
        if (!base.has_class(cls)) throw InputError("curve touches unknown class '" + cls + "'");

    ResolvedGeometry g;
    g.genus = datum.genus;
    g.x = x;
    const std::size_t n = datum.centers.size();

    if (n == 0) {
        g.model = base;
        g.c_tilde = curve_class;
        g.d_tilde = base.boundary_divisor();
        return g;
    }

    std::vector<std::string> classes = base.classes();
    for (std::size_t i = 0; i < n; ++i) {
        std::string name = "E" + std::to_string(i + 1);
        if (base.has_class(name))
            throw InputError("base lattice already has a class named '" + name +
                             "'; rename it to make room for the exceptional classes");
        g.exceptional.push_back(name);
        classes.push_back(std::move(name));
    }

    const std::size_t nb = base.classes().size();
    Matrix inter(nb + n, std::vector<Rational>(nb + n, Rational(0)));
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) inter[i][j] = base.pair(i, j);
    for (std::size_t i = 0; i < n; ++i) inter[nb + i][nb + i] = -1;

    Divisor canonical = base.canonical();
    for (const auto& e : g.exceptional) canonical.add(e, 1);

    // Each blow-up raises the Euler number by one. The boundary list is not
    // carried over: its classes now denote pullbacks, while the open-surface
    // Euler number belongs to the base model.
    g.model = SurfaceModel(std::move(classes), std::move(inter), std::move(canonical),
                           base.euler_top() + long(n), {});

    g.c_tilde = curve_class;
    g.d_tilde = base.boundary_divisor();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = datum.centers[i];
        g.m.push_back(c.m);
        g.delta.push_back(c.delta);
        g.satellite.push_back(early_stage(c.stage) ? 0 : satellite_excess(c));
        g.c_tilde.add(g.exceptional[i], Rational(-c.m));
        g.d_tilde.add(g.exceptional[i], Rational(-c.delta));
        switch (c.stage) {
            case Stage::Interior: g.interior.push_back(i); break;
            case Stage::Boundary: g.boundary.push_back(i); break;
            case Stage::NearInterior: g.near_interior.push_back(i); break;
            case Stage::NearBoundary: g.near_boundary.push_back(i); break;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        Divisor strict = Divisor::unit(g.exceptional[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& prox = datum.centers[j].proximity;
            if (std::find(prox.begin(), prox.end(), i + 1) != prox.end())
                strict.add(g.exceptional[j], -1);
        }
        g.stricts.push_back({g.exceptional[i], std::move(strict)});
    }
    return g;
}

std::vector<CurveComponent> select_stricts(const ResolvedGeometry& g,
                                           const std::vector<std::size_t>& idx) {
    std::vector<CurveComponent> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(g.stricts.at(i));
    return out;
}

namespace {

std::vector<std::size_t> concat(std::initializer_list<const std::vector<std::size_t>*> lists) {
    std::vector<std::size_t> out;
    for (const auto* l : lists) out.insert(out.end(), l->begin(), l->end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<CurveComponent> boundary_family(const ResolvedGeometry& g) {
    return select_stricts(g, concat({&g.boundary, &g.near_boundary}));
}

std::vector<CurveComponent> interior_family(const ResolvedGeometry& g) {
    return select_stricts(g, concat({&g.interior, &g.near_interior}));
}

std::vector<CurveComponent> reduction_cycle(const ResolvedGeometry& g) {
    return select_stricts(g, concat({&g.boundary, &g.near_interior, &g.near_boundary}));
}

std::vector<CurveComponent> full_cycle(const ResolvedGeometry& g) { return g.stricts; }

Rational euler_open_surface(const SurfaceModel& model) {
    Rational e(model.euler_top());
    const auto& b = model.boundary();
    for (const auto& comp : b) {
        (void)model.index(comp.cls);
        e -= Rational(2 - 2 * comp.genus);
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            e += model.pair(model.index(b[i].cls), model.index(b[j].cls));
    return e;
}

Rational euler_open_curve(const ResolvedGeometry& g) {
    Divisor cut = g.d_tilde;
    for (const auto& comp : boundary_family(g)) cut += comp.curve;
    return Rational(2 - 2 * g.genus) - intersect(cut, g.c_tilde, g.model);
}

AdjunctionReport check_adjunction(const SurfaceModel& base,
                                  const ResolutionDatum& datum,
                                  const Divisor& curve_class) {
    const ResolvedGeometry g = build_resolved_lattice(base, datum, curve_class);
    const Divisor kd = base.canonical() + base.boundary_divisor();

    AdjunctionReport rep;
    rep.lhs = intersect(kd, curve_class, base) + intersect(curve_class, curve_class, base);

    rep.rhs = -euler_open_curve(g);
    for (std::size_t i : g.interior) rep.rhs += Rational(g.m[i] * (g.m[i] - g.x[i] + 1));
    for (std::size_t i : g.boundary) rep.rhs += Rational(g.m[i] * (g.m[i] - g.x[i]));
    for (std::size_t j : g.near_interior) rep.rhs += Rational(g.m[j] * (g.m[j] - 1));
    for (std::size_t j : g.near_boundary)
        rep.rhs += Rational(g.m[j] * (g.m[j] - 1) + g.m[j] * (g.satellite[j] + g.delta[j]));

    rep.difference = rep.lhs - rep.rhs;
    rep.equal = rep.difference == 0;
    return rep;
}

} // namespace logsurf
