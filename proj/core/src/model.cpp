#include "drpslte/model.hpp"

#include <cmath>

#include "drpslte/errors.hpp"

namespace drpslte {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ValidationError(what);
}

bool finite_nonneg(double v) {
    return std::isfinite(v) && v >= 0.0;
}

bool finite_pos(double v) {
    return std::isfinite(v) && v > 0.0;
}

}  // namespace

void validate(const Task& task) {
    require(finite_nonneg(task.cycles), "task cycles must be finite and >= 0");
    require(finite_nonneg(task.data_bits), "task data_bits must be finite and >= 0");
}

void validate(const ComputePlatform& platform) {
    require(finite_pos(platform.cpu_hz), "platform cpu_hz must be finite and > 0");
    require(finite_nonneg(platform.energy_per_cycle),
            "platform energy_per_cycle must be finite and >= 0");
    require(finite_nonneg(platform.energy_per_bit),
            "platform energy_per_bit must be finite and >= 0");
}

void validate(const NetworkPath& path) {
    require(finite_pos(path.rate_bps), "path rate_bps must be finite and > 0");
    require(finite_nonneg(path.t_radio_s), "path t_radio_s must be finite and >= 0");
    require(finite_nonneg(path.t_backhaul_s), "path t_backhaul_s must be finite and >= 0");
    require(finite_nonneg(path.t_core_s), "path t_core_s must be finite and >= 0");
    require(finite_nonneg(path.t_transport_s), "path t_transport_s must be finite and >= 0");
    require(finite_nonneg(path.bs_energy_per_bit),
            "path bs_energy_per_bit must be finite and >= 0");
}

CostBreakdown edge_delay(const Task& task, const ComputePlatform& edge, const NetworkPath& path) {
    validate(task);
    validate(edge);
    validate(path);
    CostBreakdown out;
    out.compute_s = task.cycles / edge.cpu_hz;
    out.transmit_s = task.data_bits / path.rate_bps;
    out.path_s = path.t_radio_s;
    out.total_s = out.compute_s + out.transmit_s + out.path_s;
    return out;
}

CostBreakdown cloud_delay(const Task& task, const ComputePlatform& cloud, const NetworkPath& path) {
    validate(task);
    validate(cloud);
    validate(path);
    CostBreakdown out;
    out.compute_s = task.cycles / cloud.cpu_hz;
    out.transmit_s = task.data_bits / path.rate_bps;
    out.path_s = path.t_radio_s + path.t_backhaul_s + path.t_core_s + path.t_transport_s;
    out.total_s = out.compute_s + out.transmit_s + out.path_s;
    return out;
}

double edge_energy(const Task& task, const ComputePlatform& edge) {
    validate(task);
    validate(edge);
    return task.cycles * edge.energy_per_cycle + task.data_bits * edge.energy_per_bit;
}

double cloud_energy(const Task& task, const ComputePlatform& cloud, const ComputePlatform& edge,
                    const NetworkPath& path) {
    validate(task);
    validate(cloud);
    validate(edge);
    validate(path);
    // The payload is relayed through the edge and the base station on its way
    // to the cloud, so both per-bit relay rates apply on top of the cloud's
    // own compute and data costs.
    return task.data_bits * edge.energy_per_bit + task.data_bits * path.bs_energy_per_bit +
           task.cycles * cloud.energy_per_cycle + task.data_bits * cloud.energy_per_bit;
}

Crossover crossover_cycles(const ComputePlatform& edge, const ComputePlatform& cloud,
                           const NetworkPath& path) {
    validate(edge);
    validate(cloud);
    validate(path);
    // Per-cycle slowdown of the edge relative to the cloud, and the extra
    // fixed delay only the cloud path pays.
    const double slowdown = 1.0 / edge.cpu_hz - 1.0 / cloud.cpu_hz;
    const double surplus = path.t_backhaul_s + path.t_core_s + path.t_transport_s;
    if (slowdown > 0.0) {
        if (surplus > 0.0) return {CrossoverKind::threshold, surplus / slowdown};
        return {CrossoverKind::cloud_always_wins, 0.0};
    }
    if (slowdown == 0.0 && surplus == 0.0) return {CrossoverKind::always_tie, 0.0};
    return {CrossoverKind::edge_always_wins, 0.0};
}

const char* to_string(CrossoverKind kind) {
    switch (kind) {
        case CrossoverKind::threshold: return "threshold";
        case CrossoverKind::edge_always_wins: return "edge-always-wins";
        case CrossoverKind::cloud_always_wins: return "cloud-always-wins";
        case CrossoverKind::always_tie: return "always-tie";
    }
    return "unknown";
}

namespace defaults {

ComputePlatform edge_platform() {
    return {5e9, 0.1, 0.1};
}

ComputePlatform cloud_platform() {
    return {50e9, 0.1, 0.1};
}

NetworkPath network_path() {
    return {1e6, 2e-3, 2e-3, 1e-3, 3e-3, 0.1};
}

}  // namespace defaults

}  // namespace drpslte
