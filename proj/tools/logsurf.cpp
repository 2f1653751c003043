#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "logsurf/commands.hpp"

namespace {

// Splits a --support argument like "E1,E2" into component names.
logsurf::Cycle split_names(const std::string& arg) {
    logsurf::Cycle names;
    std::string current;
    for (char c : arg) {
        if (c == ',') {
            if (!current.empty()) names.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) names.push_back(current);
    return names;
}

int emit(const logsurf::Report& report, const std::string& format,
         const std::string& out_path) {
    std::string text;
    if (format == "json")
        text = report.body.dump(2) + "\n";
    else
        text = logsurf::render_text(report.body);

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write report to '" << out_path << "'\n";
            return 2;
        }
        out << text;
    } else if (report.body.contains("error") && format != "json") {
        std::cerr << text;
    } else {
        std::cout << text;
    }
    return report.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of log-surface canonical degree bounds"};
    app.require_subcommand(1);

    logsurf::Options opt;
    std::string support_arg;
    std::string alpha_arg;
    std::string format = "text";
    std::string out_path;
    unsigned long seed = 0;

    auto add_common = [&](CLI::App* cmd, bool takes_scenario) {
        if (takes_scenario)
            cmd->add_option("scenario", opt.scenario_path, "Scenario JSON file")->required();
        cmd->add_option("--bits", opt.bits, "Square-root certification precision in bits")
            ->envname("LOGSURF_BITS");
        cmd->add_option("--format", format, "Report format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out_path, "Write the report to a file instead of stdout");
        cmd->add_option("--seed", seed, "Recorded in the report for reproducible sweeps");
    };

    CLI::App* zariski = app.add_subcommand("zariski", "Decompose a divisor against a cycle");
    add_common(zariski, true);
    zariski->add_option("--support", support_arg,
                        "Comma-separated cycle component names (default: absolute)");

    CLI::App* adjunction =
        app.add_subcommand("adjunction", "Check the resolved-degree identity for a scenario");
    add_common(adjunction, true);

    CLI::App* bmy = app.add_subcommand(
        "bmy", "Evaluate the orbibundle Chern inequalities at one weight or over a grid");
    add_common(bmy, true);
    bmy->add_option("--alpha", alpha_arg, "Weight as p/q in [0,1]");
    int grid = 0;
    CLI::Option* grid_opt =
        bmy->add_option("--alpha-grid", grid, "Sweep weights j/k for j = 0..k");

    CLI::App* bound =
        app.add_subcommand("bound", "Certify canonical-degree bounds for a scenario");
    add_common(bound, true);
    std::string branch;
    CLI::Option* branch_opt =
        bound->add_option("--branch", branch, "Force one bound branch")
            ->check(CLI::IsMember({"general", "smooth", "rational"}));

    CLI::App* p2 = app.add_subcommand("p2", "Plane-pencil corollary pipeline from degrees");
    add_common(p2, true);

    CLI::App* batch = app.add_subcommand("batch", "Run every scenario file in a directory");
    add_common(batch, true);
    std::string batch_command;
    CLI::Option* batch_cmd_opt = batch->add_option(
        "--command", batch_command, "Command for scenarios without a 'command' field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    opt.command = sub->get_name();

    try {
        if (!support_arg.empty()) opt.support = split_names(support_arg);
        if (!alpha_arg.empty()) opt.alpha = logsurf::parse_rational(alpha_arg);
        if (grid_opt->count() > 0) opt.alpha_grid = grid;
        if (branch_opt->count() > 0) opt.branch = branch;
        if (batch_cmd_opt->count() > 0) opt.batch_command = batch_command;
        if (sub->count("--seed") > 0) opt.seed = seed;
    } catch (const logsurf::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const logsurf::Report report = logsurf::run_command(opt);
    return emit(report, format, out_path);
}
