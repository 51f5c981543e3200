#include "drpslte/experiments.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "drpslte/errors.hpp"
#include "drpslte/format.hpp"

namespace drpslte {

namespace {

std::vector<std::pair<double, double>> build_pairs(const SweepSpec& spec) {
    if (spec.cycles.empty()) throw ValidationError("sweep cycles list must not be empty");
    if (spec.data_bits.empty()) throw ValidationError("sweep data_bits list must not be empty");
    std::vector<std::pair<double, double>> pairs;
    if (spec.pairing == PairingMode::zipped) {
        if (spec.cycles.size() != spec.data_bits.size())
            throw ValidationError("zipped pairing needs cycles and data_bits lists of equal length");
        pairs.reserve(spec.cycles.size());
        for (std::size_t i = 0; i < spec.cycles.size(); ++i)
            pairs.emplace_back(spec.cycles[i], spec.data_bits[i]);
    } else {
        pairs.reserve(spec.cycles.size() * spec.data_bits.size());
        for (double c : spec.cycles)
            for (double d : spec.data_bits) pairs.emplace_back(c, d);
    }
    return pairs;
}

NetworkPath edge_side_path(const NetworkPath& path, const std::optional<double>& radio_override) {
    NetworkPath edge_path = path;
    if (radio_override) edge_path.t_radio_s = *radio_override;
    return edge_path;
}

std::string cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::string cell(const std::optional<int>& v) {
    return v ? format_int(*v) : std::string();
}

}  // namespace

std::vector<double> make_grid(double lo, double hi, int points, GridSpacing spacing) {
    if (points < 1) throw ValidationError("grid needs at least one point");
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi))
        throw ValidationError("grid bounds must be finite with lo <= hi");
    if (spacing == GridSpacing::log && !(lo > 0.0))
        throw ValidationError("log-spaced grid needs lo > 0");

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        grid.push_back(lo);
        return grid;
    }
    const double n = static_cast<double>(points - 1);
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / n;
        if (spacing == GridSpacing::log)
            grid.push_back(lo * std::pow(hi / lo, t));
        else
            grid.push_back(lo + t * (hi - lo));
    }
    // Pin the endpoints so sweeps hit the exact configured bounds.
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<SweepRow> sweep_delay(const SweepSpec& spec) {
    if (spec.rates_bps.empty()) throw ValidationError("sweep rates list must not be empty");
    const auto pairs = build_pairs(spec);

    std::vector<SweepRow> rows;
    rows.reserve(spec.rates_bps.size() * pairs.size());
    for (double rate : spec.rates_bps) {
        NetworkPath cloud_path = spec.path;
        cloud_path.rate_bps = rate;
        const NetworkPath edge_path = edge_side_path(cloud_path, spec.t_radio_edge_s);
        for (const auto& [c, d] : pairs) {
            const Task task{c, d};
            const CostBreakdown edge = edge_delay(task, spec.edge, edge_path);
            const CostBreakdown cloud = cloud_delay(task, spec.cloud, cloud_path);

            SweepRow row;
            row.scenario_id = spec.scenario_id;
            row.cycles = c;
            row.data_bits = d;
            row.rate_bps = rate;
            row.edge_total_s = edge.total_s;
            row.cloud_total_s = cloud.total_s;
            row.gap_s = cloud.total_s - edge.total_s;
            if (cloud.total_s > 0.0) row.rel_reduction = *row.gap_s / cloud.total_s;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<SweepRow> sweep_energy(const SweepSpec& spec, const std::vector<double>& cycle_caps) {
    if (cycle_caps.empty()) throw ValidationError("cycle caps list must not be empty");
    for (double cap : cycle_caps) {
        if (!(std::isfinite(cap) && cap > 0.0))
            throw ValidationError("cycle caps must be finite and > 0");
    }
    if (spec.data_bits.empty()) throw ValidationError("sweep data_bits list must not be empty");

    std::vector<SweepRow> rows;
    rows.reserve(cycle_caps.size() * spec.data_bits.size());
    for (double cap : cycle_caps) {
        for (double d : spec.data_bits) {
            const Task task{cap, d};
            SweepRow row;
            row.scenario_id = spec.scenario_id;
            row.cycles = cap;
            row.data_bits = d;
            row.edge_energy = edge_energy(task, spec.edge);
            row.cloud_energy = cloud_energy(task, spec.cloud, spec.edge, spec.path);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<SweepRow> sweep_fleet(const FleetScenario& base, const std::vector<int>& fleet_sizes,
                                  const std::vector<double>& totals_bits,
                                  const std::string& scenario_id) {
    const auto grid = fleet_sweep(base, fleet_sizes, totals_bits);

    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    std::size_t i = 0;
    for (int k : fleet_sizes) {
        for (double total : totals_bits) {
            const FleetResult& res = grid[i++];
            SweepRow row;
            row.scenario_id = scenario_id;
            row.fleet_size = k;
            row.total_bits = total;
            row.makespan_s = res.makespan_s;
            row.mean_delay_s = res.mean_delay_s;
            row.max_wait_s = res.max_queue_wait_s;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

Summary summarize(const std::vector<SweepRow>& rows, const ComputePlatform& edge,
                  const ComputePlatform& cloud, const NetworkPath& path) {
    Summary summary;
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& row : rows) {
        if (!row.rel_reduction) continue;
        const double r = *row.rel_reduction;
        if (count == 0) {
            summary.min_reduction = summary.max_reduction = r;
        } else {
            summary.min_reduction = std::min(summary.min_reduction, r);
            summary.max_reduction = std::max(summary.max_reduction, r);
        }
        sum += r;
        ++count;
    }
    if (count == 0) throw ValidationError("summarize needs at least one row with a reduction");
    summary.mean_reduction = sum / static_cast<double>(count);

    // 20% frontier: linear interpolation between the first adjacent same-rate
    // pair of rows that brackets 0.20.
    constexpr double kTarget = 0.20;
    for (std::size_t i = 1; i < rows.size() && !summary.frontier_d_bits; ++i) {
        const SweepRow& a = rows[i - 1];
        const SweepRow& b = rows[i];
        if (!a.rel_reduction || !b.rel_reduction || !a.data_bits || !b.data_bits) continue;
        if (!a.rate_bps || !b.rate_bps || *a.rate_bps != *b.rate_bps) continue;
        const double ra = *a.rel_reduction;
        const double rb = *b.rel_reduction;
        if ((ra - kTarget) * (rb - kTarget) > 0.0) continue;
        if (ra == rb) {
            if (ra == kTarget) summary.frontier_d_bits = *a.data_bits;
            continue;
        }
        const double t = (kTarget - ra) / (rb - ra);
        summary.frontier_d_bits = *a.data_bits + t * (*b.data_bits - *a.data_bits);
    }

    summary.crossover = crossover_cycles(edge, cloud, path);
    return summary;
}

std::string csv_header() {
    return "scenario_id,C_cycles,D_bits,R_bps,K,total_bits,edge_total_s,cloud_total_s,"
           "gap_s,rel_reduction,edge_energy,cloud_energy,makespan_s,mean_delay_s,max_wait_s";
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << csv_header() << '\n';
    for (const auto& r : rows) {
        os << r.scenario_id << ',' << cell(r.cycles) << ',' << cell(r.data_bits) << ','
           << cell(r.rate_bps) << ',' << cell(r.fleet_size) << ',' << cell(r.total_bits) << ','
           << cell(r.edge_total_s) << ',' << cell(r.cloud_total_s) << ',' << cell(r.gap_s) << ','
           << cell(r.rel_reduction) << ',' << cell(r.edge_energy) << ',' << cell(r.cloud_energy)
           << ',' << cell(r.makespan_s) << ',' << cell(r.mean_delay_s) << ','
           << cell(r.max_wait_s) << '\n';
    }
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

std::string to_json(const Summary& summary) {
    nlohmann::ordered_json j;
    j["mean_reduction"] = summary.mean_reduction;
    j["min_reduction"] = summary.min_reduction;
    j["max_reduction"] = summary.max_reduction;
    if (summary.frontier_d_bits)
        j["frontier_D_bits"] = *summary.frontier_d_bits;
    else
        j["frontier_D_bits"] = nullptr;
    if (summary.crossover.kind == CrossoverKind::threshold)
        j["crossover_cycles"] = summary.crossover.cycles;
    else
        j["crossover_cycles"] = to_string(summary.crossover.kind);
    return j.dump(2) + "\n";
}

}  // namespace drpslte
