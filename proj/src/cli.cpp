#include "fairsim/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairsim/catalog.hpp"
#include "fairsim/errors.hpp"
#include "fairsim/export.hpp"
#include "fairsim/runner.hpp"
#include "fairsim/version.hpp"

namespace fairsim {

namespace fs = std::filesystem;

namespace {

struct RunFlags {
    std::uint64_t seed = 0;
    bool seed_set = false;
    int replications = 0;  // 0 = keep the scenario's value
    int parallelism = 0;   // 0 = hardware concurrency
    bool cumulative = false;
    bool emit_events = false;
    std::string output = ".";
};

std::string sanitize_filename(const std::string& name) {
    std::string out = name;
    for (char& c : out)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_')) c = '_';
    return out.empty() ? "scenario" : out;
}

std::string fmt_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::ios_base::failure("cannot open " + tmp.string() + " for writing");
        os << content;
        if (!os) throw std::ios_base::failure("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

/// Resolves a scenario reference: catalog name first, then config file path.
struct Resolved {
    ScenarioConfig config;
    std::optional<SweepSpec> sweep;
};

Resolved resolve_scenario(const std::string& ref, std::ostream& err) {
    const bool in_catalog =
        std::any_of(catalog().begin(), catalog().end(),
                    [&](const CatalogEntry& e) { return e.name == ref; }) ||
        std::any_of(catalog_aliases().begin(), catalog_aliases().end(),
                    [&](const auto& a) { return a.first == ref; });
    if (in_catalog) {
        const CatalogEntry& entry = catalog_entry(ref);
        return Resolved{entry.config, entry.sweep};
    }
    if (fs::exists(ref)) {
        std::vector<std::string> warnings;
        ScenarioConfig config = load_config_file(ref, &warnings);
        for (const std::string& w : warnings) err << "warning: " << w << '\n';
        return Resolved{std::move(config), std::nullopt};
    }
    throw CatalogError("\"" + ref + "\" is neither a built-in scenario nor an existing config file; "
                       "see `fairsim list`");
}

void apply_flags(ScenarioConfig& config, const RunFlags& flags) {
    if (flags.seed_set) config.base_seed = flags.seed;
    if (flags.replications > 0) config.replications = flags.replications;
    if (flags.cumulative) config.metrics_mode = MetricsMode::Cumulative;
}

/// Runs one scenario; when events_path is non-empty the replications run
/// sequentially and every application row streams straight to that file.
ScenarioResult run_one(const ScenarioConfig& config, const RunFlags& flags,
                       const fs::path& events_path, std::ostream& err) {
    if (events_path.empty()) return run_scenario(config, RunOptions{flags.parallelism, false});

    validate(config);
    const long long est_rows = 1LL * config.replications * config.periods *
                               config.applicants_per_period * config.num_firms();
    if (est_rows > 10'000'000)
        err << "warning: event log may reach ~" << est_rows
            << " rows; replications run sequentially while streaming\n";

    const fs::path tmp = events_path.string() + ".tmp";
    std::vector<std::vector<MetricSeries>> per_rep;
    try {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::ios_base::failure("cannot open " + tmp.string() + " for writing");
        os << kEventsCsvHeader << '\n';
        for (int rep = 0; rep < config.replications; ++rep) {
            ReplicationResult r = run_replication(config, rep, ReplicationOptions{true});
            write_events_rows(os, rep, r.logs);
            per_rep.push_back(std::move(r.series));
        }
        if (!os) throw std::ios_base::failure("write failed: " + tmp.string());
    } catch (...) {
        std::error_code ec;
        fs::remove(tmp, ec);
        throw;
    }
    fs::rename(tmp, events_path);
    return assemble_result(config, average_replication_series(per_rep));
}

/// Writes <name>-metrics.csv and <name>-manifest.json; returns the metrics CSV
/// text so callers can build combined files.
std::string write_outputs(const ScenarioResult& result, const fs::path& dir, std::ostream& out) {
    const std::string stem = sanitize_filename(result.config.name);
    const std::string csv = metrics_csv(result);
    const fs::path csv_path = dir / (stem + "-metrics.csv");
    write_file_atomic(csv_path, csv);
    out << "wrote " << csv_path.string() << '\n';
    const fs::path manifest_path = dir / (stem + "-manifest.json");
    write_file_atomic(manifest_path, manifest_json(result));
    out << "wrote " << manifest_path.string() << '\n';
    return csv;
}

int execute_single(ScenarioConfig config, const RunFlags& flags, std::ostream& out, std::ostream& err) {
    apply_flags(config, flags);
    validate(config);
    fs::create_directories(flags.output);
    const fs::path dir(flags.output);
    fs::path events_path;
    if (flags.emit_events) events_path = dir / (sanitize_filename(config.name) + "-events.csv");
    const ScenarioResult result = run_one(config, flags, events_path, err);
    if (flags.emit_events) out << "wrote " << events_path.string() << '\n';
    write_outputs(result, dir, out);
    return 0;
}

int execute_sweep(ScenarioConfig base, SweepAxis axis, const std::vector<double>& values,
                  const RunFlags& flags, std::ostream& out, std::ostream& err) {
    apply_flags(base, flags);
    // Validate every swept config before producing any file.
    for (double v : values) {
        ScenarioConfig probe = base;
        apply_sweep_value(probe, axis, v);
        validate(probe);
    }
    fs::create_directories(flags.output);
    const fs::path dir(flags.output);

    std::ostringstream combined;
    combined << "axis,axis_value," << kMetricsCsvHeader << '\n';
    ScenarioResult last;
    for (double v : values) {
        ScenarioConfig config = base;
        apply_sweep_value(config, axis, v);
        fs::path events_path;
        if (flags.emit_events) events_path = dir / (sanitize_filename(config.name) + "-events.csv");
        ScenarioResult result = run_one(config, flags, events_path, err);
        if (flags.emit_events) out << "wrote " << events_path.string() << '\n';
        const std::string csv = write_outputs(result, dir, out);
        std::istringstream rows(csv);
        std::string row;
        std::getline(rows, row);  // skip the header
        while (std::getline(rows, row))
            combined << sweep_axis_label(axis) << ',' << fmt_value(v) << ',' << row << '\n';
        last = std::move(result);
    }

    const std::string stem = sanitize_filename(base.name) + "-" + sweep_axis_label(axis) + "-sweep";
    const fs::path combined_path = dir / (stem + ".csv");
    write_file_atomic(combined_path, combined.str());
    out << "wrote " << combined_path.string() << '\n';

    nlohmann::json manifest;
    manifest["scenario"] = base.name;
    manifest["axis"] = sweep_axis_label(axis);
    manifest["values"] = values;
    manifest["engine_version"] = kEngineVersion;
    manifest["base_seed"] = base.base_seed;
    manifest["timestamp_utc"] = last.timestamp_utc;
    manifest["config"] = nlohmann::json::parse(config_to_json(base));
    const fs::path manifest_path = dir / (stem + "-manifest.json");
    write_file_atomic(manifest_path, manifest.dump(2) + "\n");
    out << "wrote " << manifest_path.string() << '\n';
    return 0;
}

int cmd_list(std::ostream& out) {
    std::size_t width = 0;
    for (const CatalogEntry& e : catalog()) width = std::max(width, e.name.size());
    for (const CatalogEntry& e : catalog())
        out << std::left << std::setw(static_cast<int>(width) + 2) << e.name << e.summary << "  ["
            << e.anchor << "]\n";
    for (const auto& [alias, canonical] : catalog_aliases())
        out << std::left << std::setw(static_cast<int>(width) + 2) << alias
            << "alias for " << canonical << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fairsim: multi-firm lending fairness simulator", "fairsim"};
    app.set_version_flag("--version", std::string("fairsim ") + kEngineVersion);

    auto* list_cmd = app.add_subcommand("list", "List the built-in scenarios");

    RunFlags run_flags;
    std::string run_ref;
    auto* run_cmd = app.add_subcommand("run", "Run a built-in scenario or a config file");
    run_cmd->add_option("scenario", run_ref, "Scenario name or config file path")->required();
    auto* seed_opt = run_cmd->add_option("--seed", run_flags.seed, "Override the base seed");
    run_cmd->add_option("--replications", run_flags.replications, "Override the replication count");
    run_cmd->add_option("--parallelism", run_flags.parallelism,
                        "Worker threads (default: hardware concurrency)");
    run_cmd->add_option("--output", run_flags.output, "Output directory (default: .)");
    run_cmd->add_flag("--cumulative", run_flags.cumulative, "Report cumulative instead of per-period metrics");
    run_cmd->add_flag("--emit-events", run_flags.emit_events, "Also write the raw per-application event log");

    RunFlags sweep_flags;
    std::string sweep_ref;
    std::string sweep_axis_text;
    std::vector<double> sweep_values;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a scenario once per value of one parameter");
    sweep_cmd->add_option("scenario", sweep_ref, "Base scenario name or config file path")->required();
    sweep_cmd->add_option("--axis", sweep_axis_text, "threshold, sophistication, f, or cost")->required();
    sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")->required()->delimiter(',');
    auto* sweep_seed_opt = sweep_cmd->add_option("--seed", sweep_flags.seed, "Override the base seed");
    sweep_cmd->add_option("--replications", sweep_flags.replications, "Override the replication count");
    sweep_cmd->add_option("--parallelism", sweep_flags.parallelism,
                          "Worker threads (default: hardware concurrency)");
    sweep_cmd->add_option("--output", sweep_flags.output, "Output directory (default: .)");
    sweep_cmd->add_flag("--cumulative", sweep_flags.cumulative,
                        "Report cumulative instead of per-period metrics");
    sweep_cmd->add_flag("--emit-events", sweep_flags.emit_events,
                        "Also write the raw per-application event logs");

    app.require_subcommand(1);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help or the parse diagnostic; clamp to the documented
        // exit codes (0 for help/version, 1 for usage errors).
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (list_cmd->parsed()) return cmd_list(out);
        if (run_cmd->parsed()) {
            run_flags.seed_set = seed_opt->count() > 0;
            Resolved resolved = resolve_scenario(run_ref, err);
            if (resolved.sweep)
                return execute_sweep(resolved.config, resolved.sweep->axis, resolved.sweep->values,
                                     run_flags, out, err);
            return execute_single(resolved.config, run_flags, out, err);
        }
        if (sweep_cmd->parsed()) {
            sweep_flags.seed_set = sweep_seed_opt->count() > 0;
            if (sweep_values.empty()) throw ConfigError("--values: at least one value is required");
            const SweepAxis axis = parse_sweep_axis(sweep_axis_text);
            Resolved resolved = resolve_scenario(sweep_ref, err);
            return execute_sweep(resolved.config, axis, sweep_values, sweep_flags, out, err);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const fs::filesystem_error& e) {
        err << "i/o error: " << e.what() << '\n';
        return 2;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace fairsim
