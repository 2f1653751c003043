// Acceptance gate: each criterion prints one [PASS]/[FAIL] line and the
// process exits nonzero if any failed. Time budgets are pinned here.

#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "logsurf/bmy.hpp"
#include "logsurf/bounds.hpp"
#include "logsurf/errors.hpp"
#include "logsurf/scenario.hpp"
#include "logsurf/zariski.hpp"

using namespace logsurf;
using Clock = std::chrono::steady_clock;

namespace {

constexpr auto kOracleBudget = std::chrono::seconds(30);
constexpr auto kSqrtBudget = std::chrono::seconds(10);

std::string fixture(const std::string& name) {
    return std::string(LOGSURF_FIXTURES) + "/" + name;
}

Context load_context(const std::string& name) {
    return context_from_scenario(load_scenario(fixture(name)));
}

struct Sample {
    SurfaceModel model;
    Divisor d;
    Cycle cycle;
};

// Random lattices of up to six classes: diagonal in {-3..3}, distinct
// classes pairing in {0..3} as curves do, a random negative definite cycle,
// and a random effective divisor with half-integer coefficients.
std::optional<Sample> random_sample(std::mt19937& rng) {
    std::uniform_int_distribution<int> size_dist(2, 6);
    std::uniform_int_distribution<int> diag_dist(-3, 3);
    std::uniform_int_distribution<int> off_dist(0, 3);
    std::uniform_int_distribution<int> coeff_dist(0, 8);
    std::uniform_int_distribution<int> pick(0, 1);

    const int n = size_dist(rng);
    std::vector<std::string> classes;
    for (int i = 0; i < n; ++i) classes.push_back("C" + std::to_string(i));

    Matrix m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        m[i][i] = diag_dist(rng);
        for (int j = 0; j < i; ++j) m[i][j] = m[j][i] = off_dist(rng);
    }
    SurfaceModel model(classes, m, Divisor(), 0, {});

    Cycle cycle;
    for (int attempt = 0; attempt < 12 && cycle.empty(); ++attempt) {
        Cycle candidate;
        for (const auto& cls : classes)
            if (pick(rng)) candidate.push_back(cls);
        if (!candidate.empty() && is_negative_definite(candidate, model)) cycle = candidate;
    }
    if (cycle.empty()) return std::nullopt;

    Divisor d;
    for (const auto& cls : classes) d.set(cls, frac(coeff_dist(rng), 2));
    return Sample{std::move(model), std::move(d), std::move(cycle)};
}

// Re-derives every decomposition law instead of trusting the certificate.
bool laws_hold(const Divisor& d, const Cycle& cycle, const ZariskiResult& r,
               const SurfaceModel& model) {
    if (r.positive + r.negative != d) return false;
    if (!is_effective(r.negative)) return false;
    for (const auto& cls : r.negative.support()) {
        bool in_cycle = false;
        for (const auto& c : cycle) in_cycle = in_cycle || c == cls;
        if (!in_cycle) return false;
    }
    for (const auto& cls : cycle) {
        const Rational p = intersect(r.positive, Divisor::unit(cls), model);
        if (p < 0) return false;
        if (r.negative.coeff(cls) > 0 && p != 0) return false;
    }
    if (intersect(r.positive, r.negative, model) != 0) return false;
    return intersect(d, d, model) ==
           intersect(r.positive, r.positive, model) +
               intersect(r.negative, r.negative, model);
}

bool oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937 rng(3901);
    int tested = 0;
    while (tested < 500) {
        const auto s = random_sample(rng);
        if (!s) continue;
        const ZariskiResult fast = zariski_support(s->d, s->cycle, s->model);
        const ZariskiResult slow = zariski_oracle(s->d, s->cycle, s->model);
        if (fast.positive != slow.positive || fast.negative != slow.negative) return false;
        if (fast.coefficients != slow.coefficients) return false;
        ++tested;
    }
    return Clock::now() - start < kOracleBudget;
}

bool certificates_and_monotonicity() {
    std::mt19937 rng(52100);
    std::uniform_int_distribution<int> extra_dist(0, 4);
    std::uniform_int_distribution<int> pick(0, 1);
    int nested = 0;
    while (nested < 200) {
        const auto s = random_sample(rng);
        if (!s || s->cycle.size() < 2) continue;

        Cycle smaller;
        for (const auto& cls : s->cycle)
            if (pick(rng)) smaller.push_back(cls);
        if (smaller.empty() || smaller.size() == s->cycle.size()) continue;

        const auto& model = s->model;
        const ZariskiResult full = zariski_support(s->d, s->cycle, model);
        if (!full.certificate.ok()) return false;
        if (!laws_hold(s->d, s->cycle, full, model)) return false;

        // More divisor never shrinks the positive part.
        Divisor bigger = s->d;
        for (const auto& cls : model.classes()) bigger.add(cls, frac(extra_dist(rng), 2));
        const ZariskiResult grown = zariski_support(bigger, s->cycle, model);
        if (!leq(full.positive, grown.positive)) return false;

        // More cycle never shrinks the negative part, and the absolute
        // decomposition absorbs at least as much as any cycle.
        const ZariskiResult sub = zariski_support(s->d, smaller, model);
        if (!leq(sub.negative, full.negative)) return false;
        if (!leq(full.positive, sub.positive)) return false;
        const ZariskiResult abs = zariski_absolute(s->d, model);
        if (!leq(full.negative, abs.negative)) return false;
        ++nested;
    }
    return true;
}

bool adjunction_identity() {
    for (const char* name :
         {"nodal_cubic.json", "cuspidal_cubic.json", "tacnodal_quartic.json"}) {
        if (!load_context(name).adjunction.equal) return false;
    }

    // Random plane curves of degree d with interior multiple points and an
    // optional free infinitely near point per center; the genus is forced by
    // the degree and the multiplicities, and is redrawn when negative.
    const SurfaceModel plane({"H"}, {{1}}, -3 * Divisor::unit("H"), 3, {});
    std::mt19937 rng(64000);
    std::uniform_int_distribution<int> deg_dist(3, 9);
    std::uniform_int_distribution<int> count_dist(0, 3);
    std::uniform_int_distribution<int> mult_dist(2, 4);
    std::uniform_int_distribution<int> pick(0, 1);

    int tested = 0;
    while (tested < 100) {
        const int d = deg_dist(rng);
        ResolutionDatum datum;
        const int singular = count_dist(rng);
        long dropped = 0;
        std::vector<long> child_of;
        for (int i = 0; i < singular; ++i) {
            const long m = mult_dist(rng);
            datum.centers.push_back({Stage::Interior, m, 0, {}});
            dropped += m * (m - 1) / 2;
            if (pick(rng)) child_of.push_back(static_cast<long>(datum.centers.size()));
        }
        for (long parent : child_of) {
            const long m = 1 + rng() % datum.centers[parent - 1].m;
            datum.centers.push_back(
                {Stage::NearInterior, m, 0, {static_cast<std::size_t>(parent)}});
            dropped += m * (m - 1) / 2;
        }
        const long genus = static_cast<long>(d - 1) * (d - 2) / 2 - dropped;
        if (genus < 0) continue;
        datum.genus = genus;

        const auto rep = check_adjunction(plane, datum, d * Divisor::unit("H"));
        if (!rep.equal) return false;
        ++tested;
    }
    return true;
}

bool pencil_constants() {
    const P2Input pencil{.d1 = 6, .d2 = 6, .d = 13206, .genus = 0, .m = 300};
    const BoundReport rep = p2_corollary(pencil, 64);
    if (rep.values.at("e_surface") != 75) return false;
    if (rep.values.at("kd_sq") != 81) return false;
    if (rep.values.at("gap") != 6) return false;
    if (rep.values.at("m_bound") != 300) return false;
    if (rep.verdicts.at("multiplicity_bound") != Verdict::Holds) return false;

    // The same surface through the lattice pipeline: the linear coefficient
    // of its degree bound is 27 + 18 sqrt(2), certified by exact squaring.
    const BoundReport general = degree_bound_general(load_context("two_sextics_line.json"), 64);
    const RationalInterval a = general.intervals.at("A");
    const Rational lo = (a.lo - 27) / 18, hi = (a.hi - 27) / 18;
    if (!(lo * lo <= 2 && 2 <= hi * hi)) return false;
    const Int ten_billion = Int(100000) * Int(100000);
    return a.width() < frac(1, ten_billion);
}

bool pinned_quadratic() {
    const Context ctx = load_context("quartic_line.json");
    const QuadraticForm form = main_quadratic_form(ctx);
    if (form.b3 != -2 || form.b1 != -2 || form.b0 != 20) return false;
    for (int j = 0; j <= 100; ++j) {
        const Rational alpha = frac(j, 100);
        // value(alpha) = -alpha^2 + 4 alpha + 20, nonnegative on [0, 1].
        if (form.value(alpha) != -alpha * alpha + 4 * alpha + 20) return false;
        if (form.value(alpha) < 0) return false;
    }
    return true;
}

bool chains_hold_everywhere() {
    const char* swept[] = {"conic_tangent.json", "quartic_line.json", "two_sextics_line.json"};
    const char* pinned[] = {"tacnodal_quartic.json", "cuspidal_cubic.json"};

    for (const char* name : pinned) {
        const auto s = load_scenario(fixture(name));
        const Context ctx = context_from_scenario(s);
        const ChernData chern = chern_data(ctx, s.alpha.value());
        const ChainReport chain = chain_validators(ctx, chern, reduction_data(ctx, chern));
        if (!chain.all_hold) return false;
    }
    for (const char* name : swept) {
        const Context ctx = load_context(name);
        for (int j = 0; j <= 100; ++j) {
            const ChernData chern = chern_data(ctx, frac(j, 100));
            const ChainReport chain = chain_validators(ctx, chern, reduction_data(ctx, chern));
            if (!chain.all_hold) return false;
        }
    }
    for (long m = 2; m <= 50; ++m)
        for (int j = 0; j <= 100; ++j)
            if (!interior_point_bound(m, frac(j, 100))) return false;
    return true;
}

bool root_enclosures_bracket() {
    for (int i = 0; i < 50; ++i) {
        const Rational sigma = frac(50 + i, 150);  // [1/3, 1), 50 steps
        for (int j = 0; j < 50; ++j) {
            const Rational gamma = frac(j, 5);  // [0, 10), 50 steps
            const RationalInterval r = r_plus_interval(sigma, gamma, 128);
            if (certified_geq(r, RationalInterval(3 * gamma)) != Verdict::Holds) return false;
            const Rational at_lo = degree_quadratic(r.lo, sigma, gamma);
            const Rational at_hi = degree_quadratic(r.hi, sigma, gamma);
            if (at_lo * at_hi > 0) return false;
        }
    }
    return true;
}

bool ceiling_identity_range() {
    for (long t = 0; t <= 1000; ++t)
        if (!ceiling_identity_holds(t)) return false;
    return true;
}

bool sqrt_soundness_bulk() {
    const auto start = Clock::now();
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> num(0, 1000000);
    std::uniform_int_distribution<long> den(1, 1000);
    const unsigned bits_options[] = {16, 24, 32};
    Rational scales[3];
    for (int k = 0; k < 3; ++k) {
        Int pow2(1);
        mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), bits_options[k]);
        scales[k] = Rational(pow2);
    }

    for (int i = 0; i < 1000000; ++i) {
        const Rational v = frac(num(rng), den(rng));
        const int k = i % 3;
        const RationalInterval r = sqrt_interval(v, bits_options[k]);
        if (r.lo < 0) return false;
        if (r.lo * r.lo > v || v > r.hi * r.hi) return false;
        const Rational cap = r.hi < 1 ? Rational(1) : r.hi;
        if (r.width() * scales[k] > cap) return false;
    }
    return Clock::now() - start < kSqrtBudget;
}

int failures = 0;

void run(int index, const std::string& what, bool (*criterion)()) {
    bool ok = false;
    std::string note;
    try {
        ok = criterion();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " C" << index << ": " << what << note << "\n";
    if (!ok) ++failures;
}

} // namespace

int main() {
    run(1, "fixed-point decomposition matches exhaustive enumeration on 500 random lattices",
        oracle_equivalence);
    run(2, "decomposition certificates and monotonicity laws on 200 nested random inputs",
        certificates_and_monotonicity);
    run(3, "resolved-degree identity on pinned fixtures and randomized plane curves",
        adjunction_identity);
    run(4, "plane pencil pipeline reproduces its certified constants", pencil_constants);
    run(5, "quartic-line degree quadratic is pinned and nonnegative across the weight grid",
        pinned_quadratic);
    run(6, "inequality chains hold on every asserted scenario, weight grid, and point bound",
        chains_hold_everywhere);
    run(7, "root enclosures dominate and bracket the degree quadratic on a 50x50 grid",
        root_enclosures_bracket);
    run(8, "ceiling identity holds for degrees up to 1000", ceiling_identity_range);
    run(9, "one million square-root enclosures stay sound within the time budget",
        sqrt_soundness_bulk);
    return failures == 0 ? 0 : 1;
}
