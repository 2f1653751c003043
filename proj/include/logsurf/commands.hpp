#pragma once

#include <optional>
#include <string>

#include "logsurf/scenario.hpp"

namespace logsurf {

// Everything the command line hands to the dispatcher. `command` is one of
// zariski, adjunction, bmy, bound, p2, batch; `scenario_path` is a file, or
// a directory for batch.
struct Options {
    std::string command;
    std::string scenario_path;
    std::optional<Cycle> support;
    std::optional<Rational> alpha;
    std::optional<int> alpha_grid;
    unsigned bits = 64;
    std::optional<std::string> batch_command;
    std::optional<std::string> branch;
    std::optional<unsigned long> seed;
};

struct Report {
    nlohmann::json body;
    int exit_code = 0;
};

// Exit codes: 0 all verdicts hold, 1 some inequality fails, 2 invalid
// input, 3 hypothesis unmet, 4 precision exhausted. Severity order for
// aggregation: 2 > 1 > 3 > 4 > 0.
int combine_exit(int a, int b);

Report run_command(const Options& opt);

// Indented human-readable rendering of a report body.
std::string render_text(const nlohmann::json& body);

} // namespace logsurf
