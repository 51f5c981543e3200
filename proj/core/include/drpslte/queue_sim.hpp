#pragma once

#include <optional>
#include <vector>

#include "drpslte/model.hpp"

namespace drpslte {

enum class DispatchPolicy {
    round_robin,   // task j goes to UAV j mod K
    least_loaded,  // task goes to the UAV that frees up earliest, ties to the lowest index
};

// A workload stream served by a fleet of identical edge UAVs behind one
// shared uplink. The stream is split into task_count equal tasks.
struct FleetScenario {
    int fleet_size = 1;           // K, number of edge UAVs
    double total_bits = 0.0;      // aggregate payload across the stream
    int task_count = 1;           // J
    double cycles_per_bit = 0.0;  // workload intensity: cycles generated per payload bit
    NetworkPath link;
    ComputePlatform edge;
    DispatchPolicy dispatch = DispatchPolicy::round_robin;
    std::optional<int> users;  // carried as metadata only, never enters the math
};

// Event times for one task, all measured from the start of the first uplink
// transfer.
struct TaskTrace {
    int task_index = 0;      // zero-based position in the stream
    double arrival_s = 0.0;  // uplink transfer complete
    double start_s = 0.0;    // service begin on the assigned UAV
    double finish_s = 0.0;   // service end
    int uav_index = 0;
};

struct FleetResult {
    double makespan_s = 0.0;        // last service end plus the radio segment
    double mean_delay_s = 0.0;      // mean over tasks of (finish + radio segment)
    double max_queue_wait_s = 0.0;  // largest start - arrival over the stream
    std::vector<TaskTrace> traces;
};

void validate(const FleetScenario& scenario);

// Splits the stream into task_count equal tasks of total_bits/task_count bits
// and cycles_per_bit times that many cycles each. Deterministic.
std::vector<Task> generate_workload(const FleetScenario& scenario);

// Deterministic event simulation. The shared uplink serializes transfers, so
// task j (1-based) arrives at j * (data_bits / rate_bps); each UAV is a FIFO
// server with service time cycles / cpu_hz.
FleetResult simulate_fleet(const FleetScenario& scenario);

// One simulation per (fleet_size, total_bits) pair, row-major in the given
// order: fleet sizes outer, totals inner.
std::vector<FleetResult> fleet_sweep(const FleetScenario& base, const std::vector<int>& fleet_sizes,
                                     const std::vector<double>& totals_bits);

const char* to_string(DispatchPolicy policy);

}  // namespace drpslte
