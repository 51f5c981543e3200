#include "drpslte/queue_sim.hpp"

#include <algorithm>
#include <cmath>

#include "drpslte/errors.hpp"

namespace drpslte {

void validate(const FleetScenario& scenario) {
    if (scenario.fleet_size < 1) throw ValidationError("fleet_size must be >= 1");
    if (scenario.task_count < 1) throw ValidationError("task_count must be >= 1");
    if (!(std::isfinite(scenario.total_bits) && scenario.total_bits > 0.0))
        throw ValidationError("total_bits must be finite and > 0");
    if (!(std::isfinite(scenario.cycles_per_bit) && scenario.cycles_per_bit > 0.0))
        throw ValidationError("cycles_per_bit must be finite and > 0");
    if (scenario.users && *scenario.users < 0) throw ValidationError("users must be >= 0");
    validate(scenario.link);
    validate(scenario.edge);
}

std::vector<Task> generate_workload(const FleetScenario& scenario) {
    validate(scenario);
    const double per_task_bits = scenario.total_bits / scenario.task_count;
    if (!(per_task_bits > 0.0))
        throw ValidationError("total_bits / task_count underflows to zero bits per task");
    const Task task{scenario.cycles_per_bit * per_task_bits, per_task_bits};
    return std::vector<Task>(static_cast<std::size_t>(scenario.task_count), task);
}

FleetResult simulate_fleet(const FleetScenario& scenario) {
    const std::vector<Task> tasks = generate_workload(scenario);
    const double transfer_s = tasks.front().data_bits / scenario.link.rate_bps;
    const double service_s = tasks.front().cycles / scenario.edge.cpu_hz;
    const double radio_s = scenario.link.t_radio_s;
    const int fleet = scenario.fleet_size;

    std::vector<double> free_at(static_cast<std::size_t>(fleet), 0.0);

    FleetResult result;
    result.traces.reserve(tasks.size());

    double last_finish = 0.0;
    double delay_sum = 0.0;
    for (int j = 0; j < scenario.task_count; ++j) {
        // Transfers are back to back on the shared uplink; tasks are equal,
        // so arrival j is the exact product rather than a running sum.
        const double arrival = static_cast<double>(j + 1) * transfer_s;

        int uav = 0;
        if (scenario.dispatch == DispatchPolicy::round_robin) {
            uav = j % fleet;
        } else {
            for (int i = 1; i < fleet; ++i) {
                if (free_at[static_cast<std::size_t>(i)] < free_at[static_cast<std::size_t>(uav)])
                    uav = i;
            }
        }

        const double start = std::max(arrival, free_at[static_cast<std::size_t>(uav)]);
        const double finish = start + service_s;
        free_at[static_cast<std::size_t>(uav)] = finish;

        result.traces.push_back({j, arrival, start, finish, uav});
        result.max_queue_wait_s = std::max(result.max_queue_wait_s, start - arrival);
        last_finish = std::max(last_finish, finish);
        delay_sum += finish + radio_s;
    }

    result.makespan_s = last_finish + radio_s;
    result.mean_delay_s = delay_sum / static_cast<double>(scenario.task_count);
    return result;
}

std::vector<FleetResult> fleet_sweep(const FleetScenario& base, const std::vector<int>& fleet_sizes,
                                     const std::vector<double>& totals_bits) {
    if (fleet_sizes.empty()) throw ValidationError("fleet_sizes list must not be empty");
    if (totals_bits.empty()) throw ValidationError("totals_bits list must not be empty");

    std::vector<FleetResult> grid;
    grid.reserve(fleet_sizes.size() * totals_bits.size());
    for (int k : fleet_sizes) {
        for (double total : totals_bits) {
            FleetScenario cell = base;
            cell.fleet_size = k;
            cell.total_bits = total;
            grid.push_back(simulate_fleet(cell));
        }
    }
    return grid;
}

const char* to_string(DispatchPolicy policy) {
    switch (policy) {
        case DispatchPolicy::round_robin: return "round-robin";
        case DispatchPolicy::least_loaded: return "least-loaded";
    }
    return "unknown";
}

}  // namespace drpslte
