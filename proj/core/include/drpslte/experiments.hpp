#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "drpslte/model.hpp"
#include "drpslte/queue_sim.hpp"

namespace drpslte {

enum class PairingMode {
    zipped,     // cycles[i] pairs with data_bits[i]; lists must be equal length
    cartesian,  // every cycles value against every data_bits value
};

enum class GridSpacing { log, linear };

// Grid of single-task comparison points. Every grid point is evaluated with
// the plain model operations; the sweep adds no arithmetic of its own.
struct SweepSpec {
    std::string scenario_id = "default";
    std::vector<double> cycles;
    std::vector<double> data_bits;
    PairingMode pairing = PairingMode::zipped;
    std::vector<double> rates_bps;
    ComputePlatform edge;
    ComputePlatform cloud;
    NetworkPath path;
    std::optional<double> t_radio_edge_s;  // edge-side radio override, defaults to path.t_radio_s
};

// One output row. Cells that do not apply to the producing sweep stay unset
// and serialize as empty CSV fields.
struct SweepRow {
    std::string scenario_id;
    std::optional<double> cycles;
    std::optional<double> data_bits;
    std::optional<double> rate_bps;
    std::optional<int> fleet_size;
    std::optional<double> total_bits;
    std::optional<double> edge_total_s;
    std::optional<double> cloud_total_s;
    std::optional<double> gap_s;
    std::optional<double> rel_reduction;
    std::optional<double> edge_energy;
    std::optional<double> cloud_energy;
    std::optional<double> makespan_s;
    std::optional<double> mean_delay_s;
    std::optional<double> max_wait_s;
};

struct Summary {
    double mean_reduction = 0.0;
    double min_reduction = 0.0;
    double max_reduction = 0.0;
    std::optional<double> frontier_d_bits;  // payload size where the reduction crosses 20%
    Crossover crossover;
};

// points values spaced over [lo, hi]; log spacing needs lo > 0. points == 1
// yields {lo}.
std::vector<double> make_grid(double lo, double hi, int points, GridSpacing spacing);

// Edge vs cloud delay per grid point. Rows are ordered rate-major, pair index
// inner, so each rate's curve is contiguous.
std::vector<SweepRow> sweep_delay(const SweepSpec& spec);

// Edge vs cloud energy at fixed cycle caps, one row per (cap, data size),
// caps outer.
std::vector<SweepRow> sweep_energy(const SweepSpec& spec, const std::vector<double>& cycle_caps);

// Fleet simulation grid, fleet sizes outer, totals inner.
std::vector<SweepRow> sweep_fleet(const FleetScenario& base, const std::vector<int>& fleet_sizes,
                                  const std::vector<double>& totals_bits,
                                  const std::string& scenario_id);

// Aggregates the delay-sweep rows and echoes the analytic crossover for the
// same platforms. Rows without a reduction cell are ignored; all-empty input
// is a validation error.
Summary summarize(const std::vector<SweepRow>& rows, const ComputePlatform& edge,
                  const ComputePlatform& cloud, const NetworkPath& path);

std::string csv_header();
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_json(const Summary& summary);

}  // namespace drpslte
