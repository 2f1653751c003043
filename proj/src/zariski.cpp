#include "logsurf/zariski.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace logsurf {

namespace {

bool unit_basis_component(const CurveComponent& c) {
    const auto& m = c.curve.coefficients();
    return m.size() == 1 && m.begin()->second == 1;
}

struct Workspace {
    std::vector<CurveComponent> comps;
    std::vector<bool> active;
    Matrix gram;
    std::vector<Rational> d_products;
    bool basis = true;
};

Workspace prepare(const Divisor& d,
                  const std::vector<CurveComponent>& comps,
                  const SurfaceModel& model,
                  bool discard_outside_support) {
    Workspace w;
    w.comps = comps;
    std::set<std::string> names;
    for (const auto& c : w.comps) {
        if (!names.insert(c.name).second)
            throw InputError("cycle repeats component '" + c.name + "'");
        if (c.curve.zero()) throw InputError("cycle component '" + c.name + "' is zero");
        w.basis = w.basis && unit_basis_component(c);
    }
    const std::size_t n = w.comps.size();
    w.active.assign(n, true);
    if (discard_outside_support) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& cls = w.comps[i].curve.coefficients().begin()->first;
            w.active[i] = d.coeff(cls) != 0;
        }
    }
    w.gram.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            w.gram[i][j] = w.gram[j][i] = intersect(w.comps[i].curve, w.comps[j].curve, model);
    w.d_products.resize(n);
    for (std::size_t i = 0; i < n; ++i) w.d_products[i] = intersect(d, w.comps[i].curve, model);
    return w;
}

bool negative_definite_gram(const Matrix& gram, const std::vector<std::size_t>& idx) {
    if (idx.empty()) return true;
    Matrix sub(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = gram[idx[i]][idx[j]];
    const auto signs = leading_minor_signs(sub);
    if (signs.size() < sub.size()) return false;
    for (std::size_t k = 0; k < signs.size(); ++k)
        if (signs[k] != ((k % 2 == 0) ? -1 : 1)) return false;
    return true;
}

std::vector<Rational> solve_on(const Workspace& w, const std::vector<std::size_t>& idx) {
    Matrix sub(idx.size(), std::vector<Rational>(idx.size()));
    std::vector<Rational> rhs(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        rhs[i] = w.d_products[idx[i]];
        for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = w.gram[idx[i]][idx[j]];
    }
    return solve_linear(sub, rhs);
}

ZariskiResult assemble(const Divisor& d,
                       const Workspace& w,
                       const std::vector<std::size_t>& idx,
                       const std::vector<Rational>& sol,
                       const SurfaceModel& model,
                       Effectivity effectivity) {
    ZariskiResult r;
    r.coefficients.assign(w.comps.size(), Rational(0));
    for (std::size_t i = 0; i < idx.size(); ++i) r.coefficients[idx[i]] = sol[i];
    r.negative = Divisor{};
    for (std::size_t i = 0; i < w.comps.size(); ++i)
        if (r.coefficients[i] != 0) r.negative += r.coefficients[i] * w.comps[i].curve;
    r.positive = d - r.negative;
    for (std::size_t i = 0; i < w.comps.size(); ++i)
        if (r.coefficients[i] > 0) r.support.push_back(w.comps[i].name);

    auto& cert = r.certificate;
    cert.sum_matches = (r.positive + r.negative == d);
    cert.negative_effective =
        std::all_of(r.coefficients.begin(), r.coefficients.end(), [](const Rational& c) { return c >= 0; });
    // Coordinatewise effectivity of P only means something when the
    // components are basis classes and the input itself passed the
    // coordinate check; under an external certificate the coordinates of P
    // are allowed to go negative (P is effective numerically, not entrywise).
    cert.positive_checkable = w.basis && effectivity == Effectivity::Checked;
    cert.positive_effective = cert.positive_checkable ? is_effective(r.positive) : true;
    cert.nef_on_cycle = true;
    cert.orthogonal_on_support = true;
    for (std::size_t i = 0; i < w.comps.size(); ++i) {
        const Rational p = intersect(r.positive, w.comps[i].curve, model);
        if (p < 0) cert.nef_on_cycle = false;
        if (r.coefficients[i] > 0 && p != 0) cert.orthogonal_on_support = false;
    }
    cert.squares_additive = intersect(d, d, model) == intersect(r.positive, r.positive, model) +
                                                          intersect(r.negative, r.negative, model);
    return r;
}

void require_certificate(const ZariskiResult& r) {
    const auto& c = r.certificate;
    if (c.ok()) return;
    std::string what = "decomposition certificate failed:";
    if (!c.sum_matches) what += " sum";
    if (!c.negative_effective) what += " negative-effectivity";
    if (!c.positive_effective) what += " positive-effectivity";
    if (!c.nef_on_cycle) what += " nef";
    if (!c.orthogonal_on_support) what += " orthogonality";
    if (!c.squares_additive) what += " squares";
    throw InvariantViolationError(what);
}

ZariskiResult fixed_point(const Divisor& d,
                          const Workspace& w,
                          const SurfaceModel& model,
                          Effectivity effectivity,
                          bool check_support_definite) {
    std::vector<std::size_t> idx;
    std::vector<bool> in_s(w.comps.size(), false);
    for (std::size_t i = 0; i < w.comps.size(); ++i)
        if (w.active[i] && w.d_products[i] < 0) {
            idx.push_back(i);
            in_s[i] = true;
        }

    std::vector<Rational> sol;
    for (;;) {
        if (check_support_definite && !negative_definite_gram(w.gram, idx))
            throw ModelInconsistencyError(
                "negative-part support is not negative definite; the intersection data "
                "cannot come from an effective divisor on a surface");
        sol = solve_on(w, idx);
        Divisor n;
        for (std::size_t i = 0; i < idx.size(); ++i) n += sol[i] * w.comps[idx[i]].curve;
        const Divisor p = d - n;
        bool grew = false;
        for (std::size_t k = 0; k < w.comps.size(); ++k) {
            if (!w.active[k] || in_s[k]) continue;
            if (intersect(p, w.comps[k].curve, model) < 0) {
                idx.push_back(k);
                in_s[k] = true;
                grew = true;
            }
        }
        if (!grew) break;
    }
    ZariskiResult r = assemble(d, w, idx, sol, model, effectivity);
    require_certificate(r);
    return r;
}

std::vector<CurveComponent> basis_components(const Cycle& cycle) {
    std::vector<CurveComponent> comps;
    comps.reserve(cycle.size());
    for (const auto& cls : cycle) comps.push_back({cls, Divisor::unit(cls)});
    return comps;
}

ZariskiResult oracle_impl(const Divisor& d,
                          const Workspace& w,
                          const SurfaceModel& model,
                          Effectivity effectivity,
                          std::size_t limit) {
    std::vector<std::size_t> candidates_idx;
    for (std::size_t i = 0; i < w.comps.size(); ++i)
        if (w.active[i]) candidates_idx.push_back(i);
    if (candidates_idx.size() > limit)
        throw InputError("oracle refused: cycle has " + std::to_string(candidates_idx.size()) +
                         " candidate components, limit is " + std::to_string(limit));

    std::vector<ZariskiResult> passing;
    const std::uint64_t total = std::uint64_t(1) << candidates_idx.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t b = 0; b < candidates_idx.size(); ++b)
            if (mask & (std::uint64_t(1) << b)) idx.push_back(candidates_idx[b]);
        std::vector<Rational> sol;
        try {
            sol = solve_on(w, idx);
        } catch (const PreconditionError&) {
            continue; // singular subsystem: not a candidate
        }
        ZariskiResult r = assemble(d, w, idx, sol, model, effectivity);
        if (!r.certificate.ok()) continue;
        const bool duplicate = std::any_of(passing.begin(), passing.end(), [&](const ZariskiResult& o) {
            return o.negative == r.negative;
        });
        if (!duplicate) passing.push_back(std::move(r));
    }
    if (passing.size() != 1)
        throw InvariantViolationError("oracle found " + std::to_string(passing.size()) +
                                      " certified decompositions instead of exactly one");
    return passing.front();
}

} // namespace

ZariskiResult zariski_support(const Divisor& d, const Cycle& cycle, const SurfaceModel& model) {
    if (!is_effective(d)) throw PreconditionError("divisor to decompose is not effective");
    if (!is_negative_definite(cycle, model)) throw PreconditionError("cycle is not negative definite");
    const Workspace w = prepare(d, basis_components(cycle), model, true);
    return fixed_point(d, w, model, Effectivity::Checked, false);
}

ZariskiResult zariski_absolute(const Divisor& d, const SurfaceModel& model) {
    if (!is_effective(d)) throw PreconditionError("divisor to decompose is not effective");
    const Workspace w = prepare(d, basis_components(d.support()), model, true);
    return fixed_point(d, w, model, Effectivity::Checked, true);
}

ZariskiResult zariski_oracle(const Divisor& d,
                             const Cycle& cycle,
                             const SurfaceModel& model,
                             std::size_t limit) {
    if (!is_effective(d)) throw PreconditionError("divisor to decompose is not effective");
    if (!is_negative_definite(cycle, model)) throw PreconditionError("cycle is not negative definite");
    const Workspace w = prepare(d, basis_components(cycle), model, true);
    return oracle_impl(d, w, model, Effectivity::Checked, limit);
}

ZariskiResult zariski_support_on(const Divisor& d,
                                 const std::vector<CurveComponent>& cycle,
                                 const SurfaceModel& model,
                                 Effectivity effectivity) {
    if (effectivity == Effectivity::Checked && !is_effective(d))
        throw PreconditionError("divisor to decompose is not effective");
    const Workspace w = prepare(d, cycle, model, false);
    std::vector<std::size_t> all(w.comps.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (!negative_definite_gram(w.gram, all))
        throw PreconditionError("cycle is not negative definite");
    return fixed_point(d, w, model, effectivity, false);
}

ZariskiResult zariski_absolute_on(const Divisor& d,
                                  const std::vector<CurveComponent>& universe,
                                  const SurfaceModel& model,
                                  Effectivity effectivity) {
    if (effectivity == Effectivity::Checked && !is_effective(d))
        throw PreconditionError("divisor to decompose is not effective");
    const Workspace w = prepare(d, universe, model, false);
    return fixed_point(d, w, model, effectivity, true);
}

ZariskiResult zariski_oracle_on(const Divisor& d,
                                const std::vector<CurveComponent>& cycle,
                                const SurfaceModel& model,
                                Effectivity effectivity,
                                std::size_t limit) {
    if (effectivity == Effectivity::Checked && !is_effective(d))
        throw PreconditionError("divisor to decompose is not effective");
    const Workspace w = prepare(d, cycle, model, false);
    std::vector<std::size_t> all(w.comps.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (!negative_definite_gram(w.gram, all))
        throw PreconditionError("cycle is not negative definite");
    return oracle_impl(d, w, model, effectivity, limit);
}

} // namespace logsurf
