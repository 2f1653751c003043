#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "logsurf/bmy.hpp"
#include "logsurf/bounds.hpp"

namespace logsurf {

// A parsed scenario file. Which fields must be present depends on the
// command run against it; parsing only checks internal well-formedness.
struct Scenario {
    std::optional<SurfaceModel> surface;
    std::optional<Divisor> curve;
    ResolutionDatum datum;  // centers plus the curve's genus
    std::optional<Rational> alpha;
    Assertions assertions;
    std::optional<Divisor> divisor;  // the divisor a decomposition command acts on
    std::optional<Cycle> support;    // its default supporting cycle
    std::optional<P2Input> p2;
    std::optional<std::string> command;  // per-file command for batch runs
};

// Exact rational from a JSON value: an integer or a "p/q" string. Floats
// are rejected so no value silently loses exactness. Throws InputError.
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& v);

Divisor divisor_from_json(const nlohmann::json& j);
nlohmann::json divisor_to_json(const Divisor& d);

Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

// Context assembly for the commands that need the full pipeline. Throws
// InputError when the scenario lacks a surface or a curve.
Context context_from_scenario(const Scenario& s);

} // namespace logsurf
