// Copyright 2026 The Duality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "duality/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "duality/channels.h"
#include "duality/errors.h"
#include "duality/io.h"
#include "duality/observables.h"
#include "duality/state.h"
#include "json.hpp"

namespace duality::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Config file

template <typename T>
void fill_from_json(std::optional<T> &slot, const json &value, const std::string &key) {
    if constexpr (std::is_same_v<T, std::string>) {
        if (!value.is_string()) {
            throw FormatError("config key '" + key + "' must be a string");
        }
    } else if constexpr (std::is_integral_v<T>) {
        if (!value.is_number_integer()) {
            throw FormatError("config key '" + key + "' must be an integer");
        }
    } else {
        if (!value.is_number()) {
            throw FormatError("config key '" + key + "' must be a number");
        }
    }
    if (!slot) {
        slot = value.get<T>();
    }
}

using ConfigSetter = std::function<void(RunConfig &, const json &, const std::string &)>;

template <typename T>
ConfigSetter setter(std::optional<T> RunConfig::*member) {
    return [member](RunConfig &cfg, const json &value, const std::string &key) {
        fill_from_json(cfg.*member, value, key);
    };
}

const std::map<std::string, ConfigSetter> &config_keys() {
    static const std::map<std::string, ConfigSetter> keys = {
        {"builtin", setter(&RunConfig::builtin)}, {"file", setter(&RunConfig::file)},
        {"a", setter(&RunConfig::a)},             {"b", setter(&RunConfig::b)},
        {"eta", setter(&RunConfig::eta)},         {"model", setter(&RunConfig::model)},
        {"gamma", setter(&RunConfig::gamma)},     {"t-max", setter(&RunConfig::t_max)},
        {"steps", setter(&RunConfig::steps)},     {"method", setter(&RunConfig::method)},
        {"n", setter(&RunConfig::n)},             {"k", setter(&RunConfig::k)},
        {"d", setter(&RunConfig::d)},             {"L", setter(&RunConfig::L)},
        {"x-min", setter(&RunConfig::x_min)},     {"x-max", setter(&RunConfig::x_max)},
        {"samples", setter(&RunConfig::samples)}, {"out", setter(&RunConfig::out)},
        {"format", setter(&RunConfig::format)},   {"tol", setter(&RunConfig::tol)},
        {"seed", setter(&RunConfig::seed)},       {"vary", setter(&RunConfig::vary)},
        {"start", setter(&RunConfig::start)},     {"stop", setter(&RunConfig::stop)},
        {"p", setter(&RunConfig::p)},
    };
    return keys;
}

// ---------------------------------------------------------------------------
// Flag registration

template <typename T>
void add_flag(CLI::App *cmd, const std::string &name, std::optional<T> &slot, const std::string &help) {
    cmd->add_option_function<T>(name, [&slot](const T &value) { slot = value; }, help);
}

void add_output_flags(CLI::App *cmd, RunConfig &cfg, bool with_format) {
    add_flag(cmd, "--out", cfg.out, "write output to PATH instead of stdout");
    if (with_format) {
        add_flag(cmd, "--format", cfg.format, "csv | json");
    }
}

void add_common_flags(CLI::App *cmd, RunConfig &cfg) {
    add_flag(cmd, "--tol", cfg.tol, "validation tolerance (default 1e-9, or $DUALITY_DEFAULT_TOL)");
    add_flag(cmd, "--config", cfg.config, "JSON file with flag values");
}

void add_state_flags(CLI::App *cmd, RunConfig &cfg) {
    add_flag(cmd, "--builtin", cfg.builtin, "psi1 | psi2 | werner | psi-mixed | mixed-identity");
    add_flag(cmd, "--file", cfg.file, "state JSON file");
    add_flag(cmd, "--a", cfg.a, "psi1/psi2 path amplitude a");
    add_flag(cmd, "--b", cfg.b, "psi2 polarization amplitude b");
    add_flag(cmd, "--eta", cfg.eta, "werner mixing weight");
}

// ---------------------------------------------------------------------------
// Helpers

double resolve_tol(const RunConfig &cfg) {
    if (cfg.tol) {
        if (!(*cfg.tol > 0.0)) {
            throw InputError("--tol must be positive");
        }
        return *cfg.tol;
    }
    if (const char *env = std::getenv("DUALITY_DEFAULT_TOL"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        const double value = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(value > 0.0)) {
            throw InputError(std::string("DUALITY_DEFAULT_TOL is not a positive number: '") + env + "'");
        }
        return value;
    }
    return kDefaultValidateTol;
}

enum class Format { kCsv, kJson };

Format resolve_format(const RunConfig &cfg, Format fallback) {
    if (!cfg.format) {
        return fallback;
    }
    if (*cfg.format == "csv") {
        return Format::kCsv;
    }
    if (*cfg.format == "json") {
        return Format::kJson;
    }
    throw InputError("--format must be csv or json, got '" + *cfg.format + "'");
}

void emit(const RunConfig &cfg, std::ostream &out, const std::string &content) {
    if (cfg.out) {
        std::ofstream file(*cfg.out, std::ios::binary);
        if (!file) {
            throw InputError("cannot open output file '" + *cfg.out + "'");
        }
        file << content;
        return;
    }
    out << content;
}

template <typename T>
T require(const std::optional<T> &value, const char *flag, const std::string &context) {
    if (!value) {
        throw InputError(context + " requires " + flag);
    }
    return *value;
}

LabeledState build_builtin(const std::string &name, const RunConfig &cfg) {
    if (name == "psi1") {
        const double a = require(cfg.a, "--a", "builtin psi1");
        return {from_pure(psi1(a)), "psi1(a=" + format_real(a) + ")"};
    }
    if (name == "psi2") {
        const double a = require(cfg.a, "--a", "builtin psi2");
        const double b = require(cfg.b, "--b", "builtin psi2");
        return {from_pure(psi2(a, b)), "psi2(a=" + format_real(a) + ",b=" + format_real(b) + ")"};
    }
    if (name == "werner") {
        const double eta = require(cfg.eta, "--eta", "builtin werner");
        return {werner(eta), "werner(eta=" + format_real(eta) + ")"};
    }
    if (name == "psi-mixed") {
        return {from_pure(psi_mixed()), "psi-mixed"};
    }
    if (name == "mixed-identity") {
        return {maximally_mixed(), "mixed-identity"};
    }
    throw InputError("unknown builtin state '" + name +
                     "' (expected psi1, psi2, werner, psi-mixed or mixed-identity)");
}

LabeledState resolve_state(const RunConfig &cfg, const std::optional<std::string> &fallback_builtin) {
    if (cfg.builtin && cfg.file) {
        throw InputError("--builtin and --file are mutually exclusive");
    }
    if (cfg.file) {
        LabeledState state = read_state_file(*cfg.file);
        if (state.label.empty()) {
            state.label = std::filesystem::path(*cfg.file).stem().string();
        }
        return state;
    }
    if (cfg.builtin) {
        return build_builtin(*cfg.builtin, cfg);
    }
    if (fallback_builtin) {
        return build_builtin(*fallback_builtin, cfg);
    }
    throw InputError("a state is required: pass --builtin NAME or --file PATH");
}

void require_valid(const CoherencePolarizationMatrix &rho, double tol) {
    ValidationReport check = validate(rho, tol);
    if (!check.is_valid) {
        throw ValidationFailure(std::move(check));
    }
}

// ---------------------------------------------------------------------------
// Commands

int cmd_report(const RunConfig &cfg, std::ostream &out) {
    const double tol = resolve_tol(cfg);
    const LabeledState state = resolve_state(cfg, std::nullopt);
    const DualityReport r = report(state.rho, tol, state.label);
    check_report_ranges(r, tol);
    if (resolve_format(cfg, Format::kJson) == Format::kJson) {
        emit(cfg, out, report_to_json(r).dump(2) + "\n");
    } else {
        emit(cfg, out, report_csv_header() + "\n" + report_csv_row(r) + "\n");
    }
    return kExitOk;
}

struct SweepPlan {
    std::string family;
    std::string vary;
    double start;
    double stop;
    int samples;
    std::map<std::string, double> fixed;
};

SweepPlan plan_sweep(const RunConfig &cfg) {
    SweepPlan plan;
    plan.family = require(cfg.builtin, "--builtin", "sweep");
    std::vector<std::string> allowed;
    if (plan.family == "psi1") {
        allowed = {"a"};
    } else if (plan.family == "psi2") {
        allowed = {"a", "b"};
    } else if (plan.family == "werner") {
        allowed = {"eta"};
    } else {
        throw InputError("sweep family must be psi1, psi2 or werner, got '" + plan.family + "'");
    }
    plan.vary = cfg.vary.value_or(allowed.front());
    if (std::find(allowed.begin(), allowed.end(), plan.vary) == allowed.end()) {
        throw InputError("family " + plan.family + " cannot vary '" + plan.vary + "'");
    }
    plan.start = cfg.start.value_or(0.0);
    plan.stop = cfg.stop.value_or(1.0);
    plan.samples = cfg.samples.value_or(kDefaultSweepSamples);
    if (!(plan.start >= 0.0 && plan.start <= plan.stop && plan.stop <= 1.0)) {
        throw InputError("sweep range must satisfy 0 <= start <= stop <= 1");
    }
    if (plan.samples < 2) {
        throw InputError("sweep needs --samples >= 2");
    }
    if (plan.family == "psi2") {
        const std::string other = plan.vary == "a" ? "b" : "a";
        const std::optional<double> &value = other == "a" ? cfg.a : cfg.b;
        plan.fixed[other] = require(value, other == "a" ? "--a" : "--b", "psi2 sweep over " + plan.vary);
    }
    return plan;
}

CoherencePolarizationMatrix sweep_state(const SweepPlan &plan, double value) {
    if (plan.family == "psi1") {
        return from_pure(psi1(value));
    }
    if (plan.family == "psi2") {
        return plan.vary == "a" ? from_pure(psi2(value, plan.fixed.at("b"))) : from_pure(psi2(plan.fixed.at("a"), value));
    }
    return werner(value);
}

int cmd_sweep(const RunConfig &cfg, std::ostream &out) {
    const double tol = resolve_tol(cfg);
    const SweepPlan plan = plan_sweep(cfg);

    std::vector<std::pair<double, DualityReport>> rows;
    rows.reserve(plan.samples);
    for (int i = 0; i < plan.samples; ++i) {
        const double value =
            i == plan.samples - 1 ? plan.stop : plan.start + (plan.stop - plan.start) * i / (plan.samples - 1);
        DualityReport r = report(sweep_state(plan, value), tol);
        check_report_ranges(r, tol);
        rows.emplace_back(value, std::move(r));
    }

    std::ostringstream text;
    if (resolve_format(cfg, Format::kCsv) == Format::kCsv) {
        text << "# family=" << plan.family << " vary=" << plan.vary << " start=" << format_real(plan.start)
             << " stop=" << format_real(plan.stop) << " samples=" << plan.samples;
        for (const auto &[name, value] : plan.fixed) {
            text << ' ' << name << '=' << format_real(value);
        }
        text << '\n' << plan.vary << ",V,D,D2_plus_V2\n";
        for (const auto &[value, r] : rows) {
            text << format_real(value) << ',' << format_real(r.visibility) << ',' << format_real(r.distinguishability)
                 << ',' << format_real(r.complementarity) << '\n';
        }
    } else {
        json doc{{"family", plan.family}, {"vary", plan.vary}, {"start", plan.start},
                 {"stop", plan.stop},     {"samples", plan.samples}, {"fixed", plan.fixed}};
        json list = json::array();
        for (const auto &[value, r] : rows) {
            list.push_back({{plan.vary, value},
                            {"V", r.visibility},
                            {"D", r.distinguishability},
                            {"D2_plus_V2", r.complementarity}});
        }
        doc["rows"] = std::move(list);
        text << doc.dump(2) << '\n';
    }
    emit(cfg, out, text.str());
    return kExitOk;
}

int cmd_evolve(const RunConfig &cfg, std::ostream &out) {
    const double tol = resolve_tol(cfg);
    EvolutionSpec spec;
    spec.model = parse_channel_model(require(cfg.model, "--model", "evolve"));
    spec.rate = cfg.gamma.value_or(1.0);
    if (!(spec.rate > 0.0) && !cfg.t_max) {
        throw InputError("--t-max is required when --gamma is 0");
    }
    const double t_max = cfg.t_max.value_or(5.0 / spec.rate);
    const int points = cfg.steps.value_or(kDefaultTimePoints);
    spec.times = uniform_time_grid(t_max, points);
    spec.method = parse_evolution_method(cfg.method.value_or("closed"));
    spec.steps = cfg.n.value_or(kDefaultIterations);

    const LabeledState initial = resolve_state(cfg, std::string("psi-mixed"));
    require_valid(initial.rho, tol);
    const std::vector<TrajectoryPoint> traj = trajectory(initial.rho, spec, tol);
    for (const auto &point : traj) {
        check_report_ranges(point.report, tol);
    }

    std::ostringstream text;
    if (resolve_format(cfg, Format::kCsv) == Format::kCsv) {
        text << trajectory_comment(spec) << '\n';
        text << "# t_max=" << format_real(t_max) << " steps=" << points << " initial=" << initial.label << '\n';
        text << trajectory_csv_header() << '\n';
        for (const auto &point : traj) {
            text << trajectory_csv_row(point) << '\n';
        }
    } else {
        json doc{{"model", to_string(spec.model)},
                 {"gamma", spec.rate},
                 {"method", to_string(spec.method)},
                 {"n", spec.method == EvolutionMethod::kIterated ? json(spec.steps) : json(nullptr)},
                 {"t_max", t_max},
                 {"steps", points},
                 {"initial", initial.label}};
        json list = json::array();
        for (const auto &point : traj) {
            json row = report_to_json(point.report);
            row.erase("label");
            row["time"] = point.time;
            list.push_back(std::move(row));
        }
        doc["points"] = std::move(list);
        text << doc.dump(2) << '\n';
    }
    emit(cfg, out, text.str());
    return kExitOk;
}

int cmd_screen(const RunConfig &cfg, std::ostream &out) {
    const double tol = resolve_tol(cfg);
    const LabeledState state = resolve_state(cfg, std::nullopt);
    const DualityReport r = report(state.rho, tol, state.label);

    const FarFieldSetup setup{cfg.k.value_or(kDefaultWavenumber), cfg.d.value_or(kDefaultSlitSeparation),
                              cfg.L.value_or(kDefaultScreenDistance)};
    // Geometry validation happens here, before the period is used.
    (void)setup.at(0.0);
    const double half_span = 0.5 * kDefaultScreenFringes * setup.fringe_period();
    const ScanRange scan{cfg.x_min.value_or(-half_span), cfg.x_max.value_or(half_span),
                         cfg.samples.value_or(kDefaultScreenSamples)};
    const double numeric = fringe_visibility_numeric(state.rho, setup, scan);

    std::ostringstream text;
    const double step = (scan.x_max - scan.x_min) / (scan.samples - 1);
    if (resolve_format(cfg, Format::kCsv) == Format::kCsv) {
        text << "# state=" << state.label << " k=" << format_real(setup.k) << " d=" << format_real(setup.slit_separation)
             << " L=" << format_real(setup.screen_distance) << " samples=" << scan.samples << '\n';
        text << "x,intensity\n";
        for (int i = 0; i < scan.samples; ++i) {
            const double x = scan.x_min + step * i;
            text << format_real(x) << ',' << format_real(screen_intensity(state.rho, setup.at(x))) << '\n';
        }
        text << "# numeric_V=" << format_real(numeric) << " analytic_V=" << format_real(r.visibility) << '\n';
    } else {
        json rows = json::array();
        for (int i = 0; i < scan.samples; ++i) {
            const double x = scan.x_min + step * i;
            rows.push_back(json::array({x, screen_intensity(state.rho, setup.at(x))}));
        }
        json doc{{"state", state.label},  {"k", setup.k},
                 {"d", setup.slit_separation}, {"L", setup.screen_distance},
                 {"rows", rows},          {"numeric_V", numeric},
                 {"analytic_V", r.visibility}};
        text << doc.dump(2) << '\n';
    }
    emit(cfg, out, text.str());
    return kExitOk;
}

int cmd_validate_channel(const RunConfig &cfg, std::ostream &out) {
    const ChannelModel model = parse_channel_model(require(cfg.model, "--model", "validate-channel"));
    const double p = require(cfg.p, "--p", "validate-channel");
    const KrausChannel channel = make_channel(model, p);
    const double defect = channel.completeness_defect();

    const std::uint64_t seed = static_cast<std::uint64_t>(cfg.seed.value_or(1));
    const CoherencePolarizationMatrix probe = random_mixed(seed, 4);
    const CoherencePolarizationMatrix mapped = apply(probe, channel);
    const ValidationReport after = validate(mapped, resolve_tol(cfg));

    std::ostringstream text;
    text << "model=" << to_string(model) << " p=" << format_real(p) << " operators=" << channel.operators().size()
         << '\n';
    text << "completeness_defect=" << format_real(defect) << '\n';
    text << "probe seed=" << seed << " trace_defect=" << format_real(after.trace_defect)
         << " hermiticity_defect=" << format_real(after.hermiticity_defect)
         << " min_eigenvalue=" << format_real(after.min_eigenvalue) << '\n';
    emit(cfg, out, text.str());
    return defect < 1e-12 ? kExitOk : kExitUsage;
}

std::vector<std::string> figure_expansion(int figure) {
    const std::string inv_sqrt2 = format_real(std::sqrt(0.5));
    switch (figure) {
        case 2:
            return {"sweep", "--builtin", "psi1", "--vary", "a", "--start", "0", "--stop", "1", "--samples", "201"};
        case 3:
            return {"sweep", "--builtin", "psi2", "--vary", "a", "--b", inv_sqrt2,
                    "--start", "0", "--stop", "1", "--samples", "201"};
        case 4:
            return {"sweep", "--builtin", "werner", "--vary", "eta", "--start", "0", "--stop", "1", "--samples", "201"};
        case 5:
            return {"evolve", "--model", "dephasing", "--gamma", "1", "--t-max", "5", "--steps", "200",
                    "--method", "closed", "--builtin", "psi-mixed"};
        default:
            return {"evolve", "--model", "scattering", "--gamma", "1", "--t-max", "5", "--steps", "200",
                    "--method", "closed", "--builtin", "psi-mixed"};
    }
}

}  // namespace

void merge_config_file(RunConfig &cfg, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open config file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw FormatError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) {
        throw FormatError("config file must hold a JSON object");
    }
    const auto &keys = config_keys();
    for (const auto &item : doc.items()) {
        const auto it = keys.find(item.key());
        if (it == keys.end()) {
            throw FormatError("unknown config key '" + item.key() + "'");
        }
        it->second(cfg, item.value(), item.key());
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Visibility and distinguishability of path-polarization photon states", "duality"};
    app.require_subcommand(1);

    CLI::App *report_cmd = app.add_subcommand("report", "compute V, D and related observables for one state");
    add_state_flags(report_cmd, cfg);
    add_output_flags(report_cmd, cfg, true);
    add_common_flags(report_cmd, cfg);

    CLI::App *sweep_cmd = app.add_subcommand("sweep", "scan one parameter of psi1, psi2 or werner");
    add_state_flags(sweep_cmd, cfg);
    add_flag(sweep_cmd, "--vary", cfg.vary, "parameter to scan (a, b or eta)");
    add_flag(sweep_cmd, "--start", cfg.start, "first parameter value (default 0)");
    add_flag(sweep_cmd, "--stop", cfg.stop, "last parameter value (default 1)");
    add_flag(sweep_cmd, "--samples", cfg.samples, "number of rows (default 201)");
    add_output_flags(sweep_cmd, cfg, true);
    add_common_flags(sweep_cmd, cfg);

    CLI::App *evolve_cmd = app.add_subcommand("evolve", "time evolution under a Kraus environment");
    add_state_flags(evolve_cmd, cfg);
    add_flag(evolve_cmd, "--model", cfg.model, "dephasing | scattering");
    add_flag(evolve_cmd, "--gamma", cfg.gamma, "interaction rate (default 1)");
    add_flag(evolve_cmd, "--t-max", cfg.t_max, "last grid time (default 5/gamma)");
    add_flag(evolve_cmd, "--steps", cfg.steps, "number of grid times (default 200)");
    add_flag(evolve_cmd, "--method", cfg.method, "closed | iterated");
    add_flag(evolve_cmd, "--n", cfg.n, "channel applications per grid time (iterated, default 1000)");
    add_output_flags(evolve_cmd, cfg, true);
    add_common_flags(evolve_cmd, cfg);

    CLI::App *screen_cmd = app.add_subcommand("screen", "detection-screen intensity profile");
    add_state_flags(screen_cmd, cfg);
    add_flag(screen_cmd, "--k", cfg.k, "wavenumber (default 2 pi / 500e-9)");
    add_flag(screen_cmd, "--d", cfg.d, "slit separation (default 1e-3)");
    add_flag(screen_cmd, "--L", cfg.L, "mask-to-screen distance (default 1)");
    add_flag(screen_cmd, "--x-min", cfg.x_min, "scan start (default -1.5 fringe periods)");
    add_flag(screen_cmd, "--x-max", cfg.x_max, "scan end (default +1.5 fringe periods)");
    add_flag(screen_cmd, "--samples", cfg.samples, "scan samples (default 10000)");
    add_output_flags(screen_cmd, cfg, true);
    add_common_flags(screen_cmd, cfg);

    CLI::App *channel_cmd = app.add_subcommand("validate-channel", "check Kraus completeness for one channel");
    add_flag(channel_cmd, "--model", cfg.model, "dephasing | scattering");
    add_flag(channel_cmd, "--p", cfg.p, "interaction probability in [0, 1]");
    add_flag(channel_cmd, "--seed", cfg.seed, "seed of the random probe state (default 1)");
    add_output_flags(channel_cmd, cfg, false);
    add_common_flags(channel_cmd, cfg);

    std::vector<CLI::App *> figure_cmds;
    for (int figure = 2; figure <= 6; ++figure) {
        CLI::App *cmd = app.add_subcommand("figure" + std::to_string(figure), "alias for a documented sweep/evolve");
        add_output_flags(cmd, cfg, true);
        figure_cmds.push_back(cmd);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    for (std::size_t i = 0; i < figure_cmds.size(); ++i) {
        if (figure_cmds[i]->parsed()) {
            std::vector<std::string> expanded = figure_expansion(static_cast<int>(i) + 2);
            if (cfg.out) {
                expanded.insert(expanded.end(), {"--out", *cfg.out});
            }
            if (cfg.format) {
                expanded.insert(expanded.end(), {"--format", *cfg.format});
            }
            return run(expanded, out, err);
        }
    }

    try {
        if (cfg.config) {
            merge_config_file(cfg, *cfg.config);
        }
        if (report_cmd->parsed()) {
            return cmd_report(cfg, out);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(cfg, out);
        }
        if (evolve_cmd->parsed()) {
            return cmd_evolve(cfg, out);
        }
        if (screen_cmd->parsed()) {
            return cmd_screen(cfg, out);
        }
        return cmd_validate_channel(cfg, out);
    } catch (const ValidationFailure &e) {
        err << "error: " << e.what() << '\n' << validation_report_to_json(e.report()).dump(2) << '\n';
        return kExitInvalidState;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace duality::cli
