#include "logsurf/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <vector>

#include "logsurf/bounds.hpp"
#include "logsurf/errors.hpp"
#include "logsurf/zariski.hpp"

namespace logsurf {

namespace {

using nlohmann::json;

// Severity ladder for aggregation: invalid input trumps a failed
// inequality, which trumps an unmet hypothesis, which trumps an
// unresolved precision verdict.
int severity(int code) {
    switch (code) {
        case 2: return 4;
        case 1: return 3;
        case 3: return 2;
        case 4: return 1;
        default: return 0;
    }
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Holds: return 0;
        case Verdict::Fails: return 1;
        case Verdict::Unknown: return 4;
    }
    return 4;
}

int hypothesis_exit(HypothesisStatus s) {
    return s == HypothesisStatus::Unmet ? 3 : 0;
}

json interval_json(const RationalInterval& iv) {
    return json{{"lo", rational_to_json(iv.lo)}, {"hi", rational_to_json(iv.hi)}};
}

json rational_map_json(const std::map<std::string, Rational>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[k] = rational_to_json(v);
    return j;
}

json bound_report_json(const BoundReport& r) {
    json j;
    json hyp = json::object();
    for (const auto& [k, v] : r.hypotheses) hyp[k] = to_string(v);
    j["hypotheses"] = hyp;
    json ver = json::object();
    for (const auto& [k, v] : r.verdicts) ver[k] = to_string(v);
    j["verdicts"] = ver;
    if (!r.informational.empty()) {
        json inf = json::object();
        for (const auto& [k, v] : r.informational) inf[k] = to_string(v);
        j["informational"] = inf;
    }
    if (!r.intervals.empty()) {
        json iv = json::object();
        for (const auto& [k, v] : r.intervals) iv[k] = interval_json(v);
        j["intervals"] = iv;
    }
    if (!r.values.empty()) j["values"] = rational_map_json(r.values);
    j["bits_used"] = r.bits_used;
    return j;
}

int bound_report_exit(const BoundReport& r) {
    int code = 0;
    for (const auto& [k, v] : r.verdicts) code = combine_exit(code, verdict_exit(v));
    for (const auto& [k, v] : r.hypotheses) code = combine_exit(code, hypothesis_exit(v));
    return code;
}

json certificate_json(const ZariskiCertificate& c) {
    return json{{"sum_matches", c.sum_matches},
                {"negative_effective", c.negative_effective},
                {"positive_effective", c.positive_effective},
                {"nef_on_cycle", c.nef_on_cycle},
                {"orthogonal_on_support", c.orthogonal_on_support},
                {"squares_additive", c.squares_additive},
                {"ok", c.ok()}};
}

json zariski_json(const ZariskiResult& r, const std::vector<std::string>& names) {
    json j;
    j["positive"] = divisor_to_json(r.positive);
    j["negative"] = divisor_to_json(r.negative);
    json coeffs = json::object();
    for (std::size_t i = 0; i < names.size() && i < r.coefficients.size(); ++i)
        coeffs[names[i]] = rational_to_json(r.coefficients[i]);
    j["coefficients"] = coeffs;
    j["support"] = json(r.support);
    j["certificate"] = certificate_json(r.certificate);
    return j;
}

json adjunction_json(const AdjunctionReport& r) {
    return json{{"lhs", rational_to_json(r.lhs)},
                {"rhs", rational_to_json(r.rhs)},
                {"difference", rational_to_json(r.difference)},
                {"equal", r.equal}};
}

json chain_json(const ChainReport& c) {
    json checks = json::array();
    for (const auto& chk : c.checks)
        checks.push_back(json{{"name", chk.name},
                              {"lhs", rational_to_json(chk.lhs)},
                              {"rhs", rational_to_json(chk.rhs)},
                              {"holds", chk.holds}});
    json j;
    j["checks"] = checks;
    j["identity"] = json{{"route_bundle", rational_to_json(c.route_bundle)},
                         {"route_centers", rational_to_json(c.route_centers)},
                         {"equal", c.identity_equal}};
    j["principal"] = rational_to_json(c.principal);
    j["quadratic"] = rational_to_json(c.quadratic);
    j["all_hold"] = c.all_hold;
    return j;
}

json discriminant_json(const DiscriminantReport& d) {
    json j;
    j["lhs"] = rational_to_json(d.lhs);
    j["verdict"] = to_string(d.verdict);
    json hyp = json::object();
    for (const auto& [k, v] : d.hypotheses) hyp[k] = to_string(v);
    j["hypotheses"] = hyp;
    j["alpha0_defined"] = d.alpha0_defined;
    if (d.alpha0_defined) {
        j["alpha0"] = rational_to_json(d.alpha0);
        j["alpha0_in_unit_interval"] = d.alpha0_in_unit_interval;
    }
    return j;
}

Report error_report(const std::string& type, const std::string& message, int code) {
    json body;
    body["error"] = json{{"type", type}, {"message", message}};
    return Report{std::move(body), code};
}

template <typename F>
Report guarded(F&& f) {
    try {
        return f();
    } catch (const InputError& e) {
        return error_report("input", e.what(), 2);
    } catch (const InconsistentDatumError& e) {
        return error_report("inconsistent-datum", e.what(), 2);
    } catch (const ModelInconsistencyError& e) {
        return error_report("model-inconsistency", e.what(), 2);
    } catch (const InvariantViolationError& e) {
        return error_report("invariant-violation", e.what(), 2);
    } catch (const PreconditionError& e) {
        return error_report("precondition", e.what(), 3);
    } catch (const std::exception& e) {
        return error_report("internal", e.what(), 2);
    }
}

Report cmd_zariski(const Scenario& s, const Options& opt) {
    if (!s.surface) throw InputError("zariski needs a 'surface' section");
    if (!s.divisor) throw InputError("zariski needs a 'divisor' section");
    const SurfaceModel& model = *s.surface;
    const Divisor& d = *s.divisor;
    std::optional<Cycle> support = opt.support ? opt.support : s.support;

    json body;
    body["command"] = "zariski";
    body["divisor"] = divisor_to_json(d);

    ZariskiResult result;
    std::vector<std::string> names;
    if (support) {
        body["mode"] = "support";
        body["cycle"] = json(*support);
        result = zariski_support(d, *support, model);
        names = *support;
    } else {
        body["mode"] = "absolute";
        result = zariski_absolute(d, model);
        names = d.support();
    }
    body["decomposition"] = zariski_json(result, names);
    body["squares"] = json{{"d_sq", rational_to_json(intersect(d, d, model))},
                           {"p_sq", rational_to_json(intersect(result.positive, result.positive, model))},
                           {"n_sq", rational_to_json(intersect(result.negative, result.negative, model))}};
    return Report{std::move(body), 0};
}

Report cmd_adjunction(const Scenario& s) {
    if (!s.surface) throw InputError("adjunction needs a 'surface' section");
    if (!s.curve) throw InputError("adjunction needs a 'curve' section");
    AdjunctionReport rep = check_adjunction(*s.surface, s.datum, *s.curve);
    json body;
    body["command"] = "adjunction";
    body["adjunction"] = adjunction_json(rep);
    return Report{std::move(body), rep.equal ? 0 : 1};
}

std::vector<Rational> pick_alphas(const Scenario& s, const Options& opt) {
    if (opt.alpha) return {*opt.alpha};
    if (opt.alpha_grid) {
        const int k = *opt.alpha_grid;
        if (k <= 0) throw InputError("--alpha-grid needs a positive interval count");
        std::vector<Rational> alphas;
        for (int j = 0; j <= k; ++j) alphas.push_back(frac(j, k));
        return alphas;
    }
    if (s.alpha) return {*s.alpha};
    std::vector<Rational> alphas;
    for (int j = 0; j <= 10; ++j) alphas.push_back(frac(j, 10));
    return alphas;
}

Report cmd_bmy(const Scenario& s, const Options& opt) {
    Context ctx = context_from_scenario(s);
    const std::vector<Rational> alphas = pick_alphas(s, opt);

    json body;
    body["command"] = "bmy";
    body["adjunction"] = adjunction_json(ctx.adjunction);
    const QuadraticForm qf = main_quadratic_form(ctx);
    body["quadratic_form"] = json{{"b3", rational_to_json(qf.b3)},
                                  {"b1", rational_to_json(qf.b1)},
                                  {"b0", rational_to_json(qf.b0)}};

    int code = 0;
    json sweep = json::array();
    for (const Rational& alpha : alphas) {
        const ChernData chern = chern_data(ctx, alpha);
        const ReductionData red = reduction_data(ctx, chern);
        const ChainReport chain = chain_validators(ctx, chern, red);

        json blk;
        blk["alpha"] = rational_to_json(alpha);
        blk["c2"] = rational_to_json(chern.c2_norm);
        blk["c1sq"] = rational_to_json(chern.c1sq_norm);
        blk["d_alpha"] = divisor_to_json(chern.d_alpha);
        blk["d_alpha_effective"] = to_string(red.d_alpha_effective);
        blk["b"] = rational_map_json(red.b);
        blk["b_hat"] = rational_map_json(red.b_hat);
        blk["n_alpha_sq"] = rational_to_json(red.n_alpha_sq);
        blk["n_bar_sq"] = rational_to_json(red.n_bar_sq);
        blk["chain"] = chain_json(chain);
        const Verdict quad = chain.quadratic >= 0 ? Verdict::Holds : Verdict::Fails;
        blk["quadratic_nonneg"] = to_string(quad);
        sweep.push_back(std::move(blk));

        for (const auto& chk : chain.checks)
            if (!chk.holds) code = combine_exit(code, 1);
        if (!chain.identity_equal) code = combine_exit(code, 2);
        code = combine_exit(code, verdict_exit(quad));
        code = combine_exit(code, hypothesis_exit(red.d_alpha_effective));
    }
    body["sweep"] = sweep;

    const DiscriminantReport disc = discriminant_inequality(ctx);
    body["discriminant"] = discriminant_json(disc);
    code = combine_exit(code, verdict_exit(disc.verdict));
    for (const auto& [k, v] : disc.hypotheses) code = combine_exit(code, hypothesis_exit(v));
    return Report{std::move(body), code};
}

Report cmd_bound(const Scenario& s, const Options& opt) {
    Context ctx = context_from_scenario(s);

    std::vector<std::string> which;
    if (opt.branch) {
        if (*opt.branch != "general" && *opt.branch != "smooth" && *opt.branch != "rational")
            throw InputError("unknown bound branch '" + *opt.branch +
                             "' (expected general, smooth or rational)");
        which.push_back(*opt.branch);
    } else if (smooth_boundary_rational(ctx)) {
        which.push_back("rational");
    } else {
        which.push_back("general");
        if (ctx.datum.centers.empty()) which.push_back("smooth");
    }

    json branches = json::object();
    int code = 0;
    for (const std::string& w : which) {
        BoundReport rep = w == "general"  ? degree_bound_general(ctx, opt.bits)
                          : w == "smooth" ? degree_bound_smooth(ctx, opt.bits)
                                          : degree_bound_d_rational(ctx);
        branches[w] = bound_report_json(rep);
        code = combine_exit(code, bound_report_exit(rep));
    }

    json body;
    body["command"] = "bound";
    body["branches"] = branches;
    return Report{std::move(body), code};
}

Report cmd_p2(const Scenario& s, const Options& opt) {
    if (!s.p2) throw InputError("p2 needs a 'p2' section with the pencil degrees");
    BoundReport rep = p2_corollary(*s.p2, opt.bits);
    json body;
    body["command"] = "p2";
    body["report"] = bound_report_json(rep);
    return Report{std::move(body), bound_report_exit(rep)};
}

Report dispatch(const std::string& command, const Scenario& s, const Options& opt) {
    if (command == "zariski") return cmd_zariski(s, opt);
    if (command == "adjunction") return cmd_adjunction(s);
    if (command == "bmy") return cmd_bmy(s, opt);
    if (command == "bound") return cmd_bound(s, opt);
    if (command == "p2") return cmd_p2(s, opt);
    throw InputError("unknown command '" + command + "'");
}

Report run_batch(const Options& opt) {
    namespace fs = std::filesystem;
    const fs::path dir(opt.scenario_path);
    if (!fs::is_directory(dir)) throw InputError("batch needs a directory of scenario files");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    json runs = json::array();
    int code = 0;
    for (const auto& file : files) {
        Report sub = guarded([&]() -> Report {
            Scenario s = load_scenario(file.string());
            std::string command;
            if (s.command)
                command = *s.command;
            else if (opt.batch_command)
                command = *opt.batch_command;
            else
                throw InputError("scenario has no 'command' field and no --command was given");
            if (command == "batch") throw InputError("batch scenarios cannot nest");
            return dispatch(command, s, opt);
        });
        json entry;
        entry["file"] = file.filename().string();
        entry["exit"] = sub.exit_code;
        entry["report"] = std::move(sub.body);
        runs.push_back(std::move(entry));
        code = combine_exit(code, sub.exit_code);
    }

    json body;
    body["command"] = "batch";
    body["directory"] = opt.scenario_path;
    body["count"] = files.size();
    body["runs"] = runs;
    return Report{std::move(body), code};
}

bool render_inline(const json& j) {
    if (j.is_object()) return false;
    if (j.is_array()) {
        for (const auto& e : j)
            if (e.is_object() || e.is_array()) return false;
    }
    return true;
}

std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string inline_text(const json& j) {
    if (!j.is_array()) return scalar_text(j);
    std::string out = "[";
    bool first = true;
    for (const auto& e : j) {
        if (!first) out += ", ";
        out += scalar_text(e);
        first = false;
    }
    return out + "]";
}

void render(const json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (render_inline(value)) {
                out += pad + key + ": " + inline_text(value) + "\n";
            } else {
                out += pad + key + ":\n";
                render(value, indent + 1, out);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (render_inline(e)) {
                out += pad + "- " + inline_text(e) + "\n";
            } else {
                out += pad + "-\n";
                render(e, indent + 1, out);
            }
        }
    } else {
        out += pad + scalar_text(j) + "\n";
    }
}

} // namespace

int combine_exit(int a, int b) { return severity(a) >= severity(b) ? a : b; }

Report run_command(const Options& opt) {
    Report rep = guarded([&]() -> Report {
        if (opt.bits == 0) throw InputError("--bits must be positive");
        if (opt.command == "batch") return run_batch(opt);
        Scenario s = load_scenario(opt.scenario_path);
        return dispatch(opt.command, s, opt);
    });
    if (opt.seed) rep.body["seed"] = *opt.seed;
    return rep;
}

std::string render_text(const nlohmann::json& body) {
    std::string out;
    render(body, 0, out);
    return out;
}

} // namespace logsurf
