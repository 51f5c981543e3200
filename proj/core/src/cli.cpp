#include "drpslte/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "drpslte/config.hpp"
#include "drpslte/errors.hpp"
#include "drpslte/experiments.hpp"
#include "drpslte/model.hpp"
#include "drpslte/spectrum.hpp"

namespace drpslte {

namespace {

using ordered_json = nlohmann::ordered_json;

// Relative output paths land under $DRPSLTE_OUTPUT_DIR when it is set.
std::string resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("DRPSLTE_OUTPUT_DIR"); dir && *dir)
            p = std::filesystem::path(dir) / p;
    }
    return p.string();
}

// Writes via a sibling .tmp file and renames, so a failed run never leaves a
// partial payload at the target path.
void write_file_atomic(const std::string& path, const std::string& payload) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp(path + ".tmp");
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
        os << payload;
        os.flush();
        if (!os) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code cleanup;
        fs::remove(tmp, cleanup);
        throw IoError("cannot move '" + tmp.string() + "' to '" + target.string() +
                      "': " + ec.message());
    }
}

void deliver(const std::string& payload, const std::optional<std::string>& output,
             std::ostream& out) {
    if (output)
        write_file_atomic(resolve_output(*output), payload);
    else
        out << payload;
}

ordered_json breakdown_json(const CostBreakdown& b) {
    return ordered_json{{"compute_s", b.compute_s},
                        {"transmit_s", b.transmit_s},
                        {"path_s", b.path_s},
                        {"total_s", b.total_s},
                        {"energy_units", b.energy_units}};
}

std::string compare_payload(const ScenarioConfig& cfg) {
    const Task task = cfg.task();
    CostBreakdown edge = edge_delay(task, cfg.edge, cfg.edge_path());
    CostBreakdown cloud = cloud_delay(task, cfg.cloud, cfg.path);
    edge.energy_units = edge_energy(task, cfg.edge);
    cloud.energy_units = cloud_energy(task, cfg.cloud, cfg.edge, cfg.path);

    const double gap = cloud.total_s - edge.total_s;
    const Crossover cx = crossover_cycles(cfg.edge, cfg.cloud, cfg.path);

    ordered_json doc;
    doc["scenario_id"] = cfg.scenario_id;
    doc["task"] = ordered_json{{"cycles", task.cycles}, {"data_bits", task.data_bits}};
    doc["edge"] = breakdown_json(edge);
    doc["cloud"] = breakdown_json(cloud);
    doc["gap_s"] = gap;
    if (cloud.total_s > 0.0)
        doc["rel_reduction"] = gap / cloud.total_s;
    else
        doc["rel_reduction"] = nullptr;
    doc["crossover"] = ordered_json{{"kind", to_string(cx.kind)}};
    if (cx.kind == CrossoverKind::threshold)
        doc["crossover"]["cycles"] = cx.cycles;
    else
        doc["crossover"]["cycles"] = nullptr;
    return doc.dump(2) + "\n";
}

std::string spectrum_payload(const std::vector<SpectrumAllocation>& rows,
                             const std::string& format) {
    return format == "json" ? to_json(rows) : to_csv(rows);
}

std::string total_bandwidth_payload(const std::string& country, const std::string& format) {
    const double total = total_bandwidth(country);
    if (format == "json") {
        ordered_json doc{{"country", country}, {"total_bandwidth_mhz", total}};
        return doc.dump(2) + "\n";
    }
    ordered_json cell = total;  // reuse the JSON shortest-round-trip formatter
    return "country,total_bandwidth_mhz\n" + country + "," + cell.dump() + "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Delay and energy explorer for task offloading to edge or cloud compute"};
    app.name("drpslte");
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string output_flag;
    app.add_option("--config", config_path, "Scenario file with 'key = value' lines");
    app.add_option("--set", overrides, "Override one scenario key as key=value (repeatable)");
    app.add_option("-o,--output", output_flag,
                   "Write the data payload to this file atomically");

    auto* compare = app.add_subcommand(
        "compare", "Cost of one task on the edge versus the cloud (JSON)");
    auto* sweep_delay_cmd = app.add_subcommand(
        "sweep-delay", "Delay comparison across the workload grid and rates (CSV)");
    auto* sweep_energy_cmd = app.add_subcommand(
        "sweep-energy", "Energy comparison across data sizes at each cycle cap (CSV)");
    auto* sweep_fleet_cmd = app.add_subcommand(
        "sweep-fleet", "Fleet simulation across sizes and workload totals (CSV)");
    auto* summary_cmd = app.add_subcommand(
        "summary", "Aggregate statistics for the delay sweep (JSON)");
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "Query the public-safety band registry");
    for (auto* sub : {compare, sweep_delay_cmd, sweep_energy_cmd, sweep_fleet_cmd, summary_cmd,
                      spectrum_cmd})
        sub->fallthrough();

    std::string country;
    int region = 0;
    std::vector<double> overlap;
    bool want_total = false;
    std::string format = "csv";
    auto* country_opt =
        spectrum_cmd->add_option("--country", country, "Rows for one country or area");
    auto* region_opt = spectrum_cmd->add_option("--region", region, "Rows for one ITU region")
                           ->check(CLI::Range(1, 3));
    auto* overlap_opt =
        spectrum_cmd
            ->add_option("--overlap", overlap,
                         "Rows overlapping [LOW, HIGH) MHz, endpoints exclusive on the right")
            ->expected(2);
    auto* total_opt = spectrum_cmd->add_flag("--total-bandwidth", want_total,
                                             "Print the summed bandwidth for --country");
    spectrum_cmd->add_option("--format", format, "Payload format")
        ->check(CLI::IsMember({"csv", "json"}));
    overlap_opt->excludes(country_opt)->excludes(region_opt)->excludes(total_opt);
    region_opt->excludes(country_opt);
    total_opt->needs(country_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        ScenarioConfig cfg;
        if (!config_path.empty()) cfg = parse_scenario_file(config_path);
        for (const auto& assignment : overrides) apply_setting(cfg, assignment);
        validate(cfg);

        std::optional<std::string> output = cfg.output_path;
        if (!output_flag.empty()) output = output_flag;

        if (compare->parsed()) {
            deliver(compare_payload(cfg), output, out);
        } else if (sweep_delay_cmd->parsed()) {
            deliver(to_csv(sweep_delay(cfg.sweep_spec())), output, out);
        } else if (sweep_energy_cmd->parsed()) {
            deliver(to_csv(sweep_energy(cfg.sweep_spec(), cfg.energy_caps)), output, out);
        } else if (sweep_fleet_cmd->parsed()) {
            deliver(to_csv(sweep_fleet(cfg.fleet_scenario(), cfg.fleet_sizes,
                                       cfg.fleet_totals_bits, cfg.scenario_id)),
                    output, out);
        } else if (summary_cmd->parsed()) {
            const auto rows = sweep_delay(cfg.sweep_spec());
            deliver(to_json(summarize(rows, cfg.edge, cfg.cloud, cfg.path)), output, out);
        } else if (spectrum_cmd->parsed()) {
            std::string payload;
            if (want_total)
                payload = total_bandwidth_payload(country, format);
            else if (!overlap.empty())
                payload = spectrum_payload(bands_overlapping(overlap[0], overlap[1]), format);
            else if (!country.empty())
                payload = spectrum_payload(allocations_for(country), format);
            else if (region_opt->count() > 0)
                payload = spectrum_payload(allocations_for("region " + std::to_string(region)),
                                           format);
            else
                payload = spectrum_payload(load_registry(), format);
            deliver(payload, output, out);
        }
        return 0;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NotFoundError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace drpslte
