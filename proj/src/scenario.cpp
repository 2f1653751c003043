#include "logsurf/scenario.hpp"

#include <cstdint>
#include <fstream>
#include <limits>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

void expect_object(const json& j, const char* what) {
    if (!j.is_object()) bad(std::string(what) + " must be a JSON object");
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const char* where) {
    for (const auto& [key, value] : j.items()) {
        if (key == "title" || key == "notes") continue;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) bad(std::string("unknown field '") + key + "' in " + where);
    }
}

long long_from_json(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long>();
}

Stage stage_from_json(const json& j) {
    if (!j.is_string()) bad("stage must be a string");
    const std::string s = j.get<std::string>();
    if (s == "interior" || s == "S1") return Stage::Interior;
    if (s == "boundary" || s == "S2") return Stage::Boundary;
    if (s == "near-interior" || s == "LATE1") return Stage::NearInterior;
    if (s == "near-boundary" || s == "LATE2") return Stage::NearBoundary;
    bad("unknown stage '" + s +
        "' (expected interior, boundary, near-interior or near-boundary)");
}

SurfaceModel surface_from_json(const json& j) {
    expect_object(j, "surface");
    reject_unknown_keys(j, {"classes", "intersection", "canonical", "euler", "boundary"},
                        "surface");

    const json& jc = field(j, "classes");
    if (!jc.is_array()) bad("surface.classes must be an array of names");
    std::vector<std::string> classes;
    for (const auto& c : jc) {
        if (!c.is_string()) bad("class names must be strings");
        classes.push_back(c.get<std::string>());
    }

    const json& jm = field(j, "intersection");
    if (!jm.is_array()) bad("surface.intersection must be a matrix");
    Matrix inter;
    for (const auto& row : jm) {
        if (!row.is_array()) bad("surface.intersection must be a matrix");
        std::vector<Rational> r;
        for (const auto& entry : row) r.push_back(rational_from_json(entry));
        inter.push_back(std::move(r));
    }

    Divisor canonical = divisor_from_json(field(j, "canonical"));
    const long euler = long_from_json(field(j, "euler"), "surface.euler");

    std::vector<BoundaryComponent> boundary;
    if (auto it = j.find("boundary"); it != j.end()) {
        if (!it->is_array()) bad("surface.boundary must be an array");
        for (const auto& comp : *it) {
            expect_object(comp, "boundary component");
            reject_unknown_keys(comp, {"class", "genus"}, "boundary component");
            BoundaryComponent bc;
            const json& cls = field(comp, "class");
            if (!cls.is_string()) bad("boundary component class must be a string");
            bc.cls = cls.get<std::string>();
            bc.genus = long_from_json(field(comp, "genus"), "boundary genus");
            boundary.push_back(std::move(bc));
        }
    }
    return SurfaceModel(std::move(classes), std::move(inter), std::move(canonical), euler,
                        std::move(boundary));
}

ResolutionDatum resolution_from_json(const json& j, long genus) {
    expect_object(j, "resolution");
    reject_unknown_keys(j, {"centers"}, "resolution");
    ResolutionDatum datum;
    datum.genus = genus;
    if (auto it = j.find("centers"); it != j.end()) {
        if (!it->is_array()) bad("resolution.centers must be an array");
        for (const auto& jc : *it) {
            expect_object(jc, "center");
            reject_unknown_keys(jc, {"stage", "m", "delta", "proximity"}, "center");
            BlowupCenter c;
            c.stage = stage_from_json(field(jc, "stage"));
            c.m = long_from_json(field(jc, "m"), "center multiplicity");
            if (auto d = jc.find("delta"); d != jc.end())
                c.delta = long_from_json(*d, "center delta");
            if (auto p = jc.find("proximity"); p != jc.end()) {
                if (!p->is_array()) bad("proximity must be an array of center indices");
                for (const auto& e : *p) {
                    const long v = long_from_json(e, "proximity entry");
                    if (v <= 0) bad("proximity entries are positive 1-based indices");
                    c.proximity.push_back(static_cast<std::size_t>(v));
                }
            }
            datum.centers.push_back(std::move(c));
        }
    }
    return datum;
}

P2Input p2_from_json(const json& j) {
    expect_object(j, "p2");
    reject_unknown_keys(j, {"d1", "d2", "d", "genus", "m", "lambda0"}, "p2");
    P2Input in;
    in.d1 = long_from_json(field(j, "d1"), "p2.d1");
    in.d2 = long_from_json(field(j, "d2"), "p2.d2");
    in.d = long_from_json(field(j, "d"), "p2.d");
    in.genus = long_from_json(field(j, "genus"), "p2.genus");
    in.m = long_from_json(field(j, "m"), "p2.m");
    if (auto it = j.find("lambda0"); it != j.end()) in.lambda0 = rational_from_json(*it);
    return in;
}

Assertions assertions_from_json(const json& j) {
    expect_object(j, "assertions");
    reject_unknown_keys(j, {"kappa_nonneg", "nef", "big", "kplusd_effective"}, "assertions");
    Assertions a;
    auto flag = [&](const char* key, bool& out) {
        if (auto it = j.find(key); it != j.end()) {
            if (!it->is_boolean()) bad(std::string("assertions.") + key + " must be a boolean");
            out = it->get<bool>();
        }
    };
    flag("kappa_nonneg", a.kappa_nonneg);
    flag("nef", a.nef);
    flag("big", a.big);
    if (auto it = j.find("kplusd_effective"); it != j.end())
        a.kplusd_effective = divisor_from_json(*it);
    return a;
}

} // namespace

Rational rational_from_json(const json& j) {
    if (j.is_number_float())
        bad("floating-point literals are not accepted; write rationals as \"p/q\" strings");
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        bad("integer literal does not fit in 64 bits; write it as a string");
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        Int n;
        if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
            n = static_cast<long>(v);
        } else {
            n = Int(std::to_string(v));
        }
        return Rational(n);
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad("expected a rational (integer or \"p/q\" string)");
}

json rational_to_json(const Rational& v) {
    if (is_integer(v) && v.get_num().fits_slong_p()) return json(v.get_num().get_si());
    return json(to_string(v));
}

Divisor divisor_from_json(const json& j) {
    expect_object(j, "a divisor");
    Divisor d;
    for (const auto& [cls, coeff] : j.items()) d.add(cls, rational_from_json(coeff));
    return d;
}

json divisor_to_json(const Divisor& d) {
    json j = json::object();
    for (const auto& [cls, coeff] : d.coefficients()) j[cls] = rational_to_json(coeff);
    return j;
}

Scenario parse_scenario(const json& j) {
    expect_object(j, "a scenario");
    reject_unknown_keys(j,
                        {"surface", "curve", "resolution", "alpha", "assertions", "divisor",
                         "support", "p2", "command"},
                        "the scenario");

    Scenario s;
    if (auto it = j.find("surface"); it != j.end()) s.surface = surface_from_json(*it);

    long genus = 0;
    if (auto it = j.find("curve"); it != j.end()) {
        expect_object(*it, "curve");
        reject_unknown_keys(*it, {"class", "genus"}, "curve");
        s.curve = divisor_from_json(field(*it, "class"));
        genus = long_from_json(field(*it, "genus"), "curve.genus");
    }
    if (auto it = j.find("resolution"); it != j.end())
        s.datum = resolution_from_json(*it, genus);
    else
        s.datum.genus = genus;

    if (auto it = j.find("alpha"); it != j.end()) s.alpha = rational_from_json(*it);
    if (auto it = j.find("assertions"); it != j.end()) s.assertions = assertions_from_json(*it);
    if (auto it = j.find("divisor"); it != j.end()) s.divisor = divisor_from_json(*it);
    if (auto it = j.find("support"); it != j.end()) {
        if (!it->is_array()) bad("support must be an array of class names");
        Cycle cycle;
        for (const auto& e : *it) {
            if (!e.is_string()) bad("support entries must be class names");
            cycle.push_back(e.get<std::string>());
        }
        s.support = std::move(cycle);
    }
    if (auto it = j.find("p2"); it != j.end()) s.p2 = p2_from_json(*it);
    if (auto it = j.find("command"); it != j.end()) {
        if (!it->is_string()) bad("command must be a string");
        s.command = it->get<std::string>();
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open scenario file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        bad("scenario file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_scenario(j);
}

Context context_from_scenario(const Scenario& s) {
    if (!s.surface) bad("scenario needs a 'surface' section for this command");
    if (!s.curve) bad("scenario needs a 'curve' section for this command");
    return make_context(*s.surface, s.datum, *s.curve, s.assertions);
}

} // namespace logsurf
