#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "drpslte/experiments.hpp"
#include "drpslte/model.hpp"
#include "drpslte/queue_sim.hpp"

namespace drpslte {

// Fully normalized run parameters. Every quantity is stored in SI units
// (bits, seconds, hertz, bits per second); the parser converts convenience
// suffixes like "5 GHz", "2 ms", "1 Mbps" or "100 Mb" on the way in.
//
// Defaults describe the stock scenario: 5 GHz edge vs 50 GHz cloud over a
// 1 Mbps uplink with 2/2/1/3 ms segment delays and all energy rates at 0.1.
struct ScenarioConfig {
    std::string scenario_id = "default";

    ComputePlatform edge{5e9, 0.1, 0.1};
    ComputePlatform cloud{50e9, 0.1, 0.1};
    NetworkPath path{1e6, 2e-3, 2e-3, 1e-3, 3e-3, 0.1};
    std::optional<double> t_radio_edge_s;  // edge-path radio delay override

    // single comparison point
    double cycles = 1e6;
    double data_bits = 1e5;

    // delay/energy sweep grids
    int sweep_points = 100;
    double c_min = 1e4;
    double c_max = 1e6;
    double d_min = 1e3;
    double d_max = 1e5;
    PairingMode pairing = PairingMode::zipped;
    GridSpacing spacing = GridSpacing::log;
    std::vector<double> rates_bps{1e6};
    std::vector<double> energy_caps{1e6, 1e7, 1e8};

    // fleet simulation
    int task_count = 100;
    double cycles_per_bit = 1e4;
    DispatchPolicy dispatch = DispatchPolicy::round_robin;
    std::vector<int> fleet_sizes{1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<double> fleet_totals_bits{1e6, 1e7, 1e8};
    std::optional<int> users;

    std::optional<std::string> output_path;

    bool operator==(const ScenarioConfig&) const = default;

    Task task() const { return {cycles, data_bits}; }
    NetworkPath edge_path() const;         // path with the radio override applied
    SweepSpec sweep_spec() const;          // grids materialized from the ranges
    FleetScenario fleet_scenario() const;  // template for fleet sweeps
};

// Parses "key = value" lines; '#' and ';' start comments, blank lines are
// skipped, later assignments win. Unknown keys are rejected.
ScenarioConfig parse_scenario(std::istream& in);
ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig parse_scenario_file(const std::string& path);

// Applies one "key=value" assignment on top of an existing config, using the
// same key grammar as the file parser. This is how CLI flags override files.
void apply_setting(ScenarioConfig& config, const std::string& assignment);

// Serializes every field in canonical SI units. parse_scenario(emit(c)) == c.
std::string emit(const ScenarioConfig& config);

// Checks every invariant, naming the offending key in the error message.
void validate(const ScenarioConfig& config);

}  // namespace drpslte
