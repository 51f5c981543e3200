#pragma once

namespace drpslte {

// One offloadable job: how much computing it generates and how much payload
// has to travel to the processing site.
struct Task {
    double cycles = 0.0;     // computation cycles
    double data_bits = 0.0;  // payload size in bits

    bool operator==(const Task&) const = default;
};

// A processing site, either a UAV cloudlet at the edge or a central cloud.
struct ComputePlatform {
    double cpu_hz = 0.0;            // CPU frequency, cycles per second
    double energy_per_cycle = 0.0;  // energy units per cycle executed
    double energy_per_bit = 0.0;    // energy units per bit handled

    bool operator==(const ComputePlatform&) const = default;
};

// Effective uplink plus the fixed per-segment delays between the user and the
// processing site. The edge path crosses only the radio segment; the cloud
// path additionally crosses backhaul, core and transport.
struct NetworkPath {
    double rate_bps = 0.0;  // effective data rate, bits per second
    double t_radio_s = 0.0;
    double t_backhaul_s = 0.0;
    double t_core_s = 0.0;
    double t_transport_s = 0.0;
    double bs_energy_per_bit = 0.0;  // base-station relay cost, energy units per bit

    bool operator==(const NetworkPath&) const = default;
};

// Delay decomposition for one task. total_s is always the exact sum of the
// three components. The delay functions leave energy_units at zero; callers
// that want a combined record fill it from edge_energy()/cloud_energy().
struct CostBreakdown {
    double compute_s = 0.0;
    double transmit_s = 0.0;
    double path_s = 0.0;
    double total_s = 0.0;
    double energy_units = 0.0;
};

enum class CrossoverKind {
    threshold,          // edge wins strictly below `cycles`, cloud strictly above
    edge_always_wins,   // edge delay <= cloud delay for every task
    cloud_always_wins,  // cloud delay < edge delay for every task with cycles > 0
    always_tie,         // both paths identical for every task
};

struct Crossover {
    CrossoverKind kind = CrossoverKind::threshold;
    double cycles = 0.0;  // meaningful only for CrossoverKind::threshold
};

void validate(const Task& task);
void validate(const ComputePlatform& platform);
void validate(const NetworkPath& path);

// Delay of running a task on the UAV cloudlet: compute + uplink transfer +
// radio segment.
CostBreakdown edge_delay(const Task& task, const ComputePlatform& edge, const NetworkPath& path);

// Delay of running the same task behind the full radio/backhaul/core/transport
// chain on the central cloud.
CostBreakdown cloud_delay(const Task& task, const ComputePlatform& cloud, const NetworkPath& path);

// Energy drawn by edge execution: cycles plus payload handling on the cloudlet.
double edge_energy(const Task& task, const ComputePlatform& edge);

// Energy drawn by cloud execution: payload relayed through the edge and the
// base station, then cycles plus payload handling on the cloud.
double cloud_energy(const Task& task, const ComputePlatform& cloud, const ComputePlatform& edge,
                    const NetworkPath& path);

// Cycle count at which the two paths swap delay ordering. Transfer time and
// the radio segment cancel between the two paths, so the answer depends only
// on the CPU frequencies and the extra path delay the cloud pays.
Crossover crossover_cycles(const ComputePlatform& edge, const ComputePlatform& cloud,
                           const NetworkPath& path);

const char* to_string(CrossoverKind kind);

// Stock parameter set used when nothing is configured: 5 GHz edge vs 50 GHz
// cloud, 1 Mbps uplink, 2/2/1/3 ms segment delays, all energy rates 0.1.
namespace defaults {
ComputePlatform edge_platform();
ComputePlatform cloud_platform();
NetworkPath network_path();
}  // namespace defaults

}  // namespace drpslte
