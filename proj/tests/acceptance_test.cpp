// Acceptance gate: every release-blocking behavior in one binary, one
// PASS/FAIL line per criterion. Takes the CLI executable as argv[1] for the
// end-to-end determinism checks; without it those fall back to in-process
// invocation.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "drpslte/cli.hpp"
#include "drpslte/config.hpp"
#include "drpslte/experiments.hpp"
#include "drpslte/model.hpp"
#include "drpslte/queue_sim.hpp"
#include "drpslte/spectrum.hpp"

using namespace drpslte;

namespace {

int g_failed_details = 0;

bool expect(bool ok, const char* what) {
    if (!ok) {
        std::fprintf(stderr, "  check failed: %s\n", what);
        ++g_failed_details;
    }
    return ok;
}

bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// --- criterion 1: single-point delay oracle -------------------------------

bool point_oracle() {
    const Task task{1e6, 1e5};
    const double edge =
        edge_delay(task, defaults::edge_platform(), defaults::network_path()).total_s;
    const double cloud =
        cloud_delay(task, defaults::cloud_platform(), defaults::network_path()).total_s;
    bool ok = expect(close_rel(edge, 0.1022, 1e-9), "edge total != 102.2 ms");
    ok &= expect(close_rel(cloud, 0.10802, 1e-9), "cloud total != 108.02 ms");
    return ok;
}

// --- criterion 2: delay gap closed form ------------------------------------

bool gap_law() {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> cycles(1e4, 1e6);
    std::uniform_real_distribution<double> bits(1e3, 1e5);
    std::uniform_int_distribution<int> rate_pick(1, 3);

    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        NetworkPath path = defaults::network_path();
        path.rate_bps = 1e6 * rate_pick(rng);
        const Task task{cycles(rng), bits(rng)};
        const double gap =
            cloud_delay(task, defaults::cloud_platform(), path).total_s -
            edge_delay(task, defaults::edge_platform(), path).total_s;
        ok &= close_rel(gap, 6e-3 - task.cycles * 1.8e-10, 1e-9);

        // The gap may depend on neither the payload nor the rate.
        NetworkPath other = defaults::network_path();
        other.rate_bps = 1e6 * rate_pick(rng);
        const Task moved{task.cycles, bits(rng)};
        const double gap2 =
            cloud_delay(moved, defaults::cloud_platform(), other).total_s -
            edge_delay(moved, defaults::edge_platform(), other).total_s;
        ok &= close_rel(gap2, gap, 1e-9);
    }
    return expect(ok, "gap law violated on the random sample");
}

// --- criterion 3: crossover workload ---------------------------------------

bool crossover_flip() {
    const ComputePlatform edge = defaults::edge_platform();
    const ComputePlatform cloud = defaults::cloud_platform();
    const NetworkPath path = defaults::network_path();

    const Crossover cx = crossover_cycles(edge, cloud, path);
    bool ok = expect(cx.kind == CrossoverKind::threshold, "crossover kind != threshold");
    ok &= expect(close_rel(cx.cycles, 33333333.333333333, 1e-6),
                 "crossover threshold != 3.333e7 cycles");

    std::mt19937 rng(777);
    std::uniform_real_distribution<double> below(0.5 * cx.cycles, 0.99 * cx.cycles);
    std::uniform_real_distribution<double> above(1.01 * cx.cycles, 1.5 * cx.cycles);
    std::uniform_real_distribution<double> bits(1e3, 1e5);
    bool flips = true;
    for (int i = 0; i < 100; ++i) {
        const Task light{below(rng), bits(rng)};
        const Task heavy{above(rng), bits(rng)};
        flips &= edge_delay(light, edge, path).total_s < cloud_delay(light, cloud, path).total_s;
        flips &= edge_delay(heavy, edge, path).total_s > cloud_delay(heavy, cloud, path).total_s;
    }
    ok &= expect(flips, "ordering does not flip around the threshold");
    return ok;
}

// --- criterion 4: 20% reduction frontier and positive margins --------------

bool reduction_frontier() {
    ScenarioConfig cfg;
    const SweepSpec spec = cfg.sweep_spec();
    const auto rows = sweep_delay(spec);
    const Summary s = summarize(rows, spec.edge, spec.cloud, spec.path);

    bool ok = expect(s.frontier_d_bits.has_value(), "no 20% frontier found");
    if (s.frontier_d_bits)
        ok &= expect(std::abs(*s.frontier_d_bits - 2.2e4) <= 0.02 * 2.2e4,
                     "frontier further than 2% from 2.2e4 bits");

    double min_gap = 1e300;
    bool all_positive = true;
    for (const auto& row : rows) {
        all_positive &= row.rel_reduction.has_value() && *row.rel_reduction > 0.0;
        min_gap = std::min(min_gap, *row.gap_s);
    }
    ok &= expect(all_positive, "a grid point shows no reduction");
    ok &= expect(min_gap >= 5.82e-3 * (1.0 - 1e-9), "minimum margin below 5.82 ms");
    return ok;
}

// --- criterion 5: energy gap law and monotonicity ---------------------------

bool energy_law() {
    std::mt19937 rng(24680);
    std::uniform_real_distribution<double> cycles(1e4, 1e8);
    std::uniform_real_distribution<double> bits(1e3, 1e5);

    bool law = true;
    for (int i = 0; i < 1000; ++i) {
        const Task task{cycles(rng), bits(rng)};
        const double gap = cloud_energy(task, defaults::cloud_platform(),
                                        defaults::edge_platform(), defaults::network_path()) -
                           edge_energy(task, defaults::edge_platform());
        law &= close_rel(gap, 0.2 * task.data_bits, 1e-9);
    }
    bool ok = expect(law, "energy gap != 0.2 per bit on the random sample");

    ScenarioConfig cfg;
    const auto rows = sweep_energy(cfg.sweep_spec(), {1e6, 1e7, 1e8});
    bool monotone = rows.size() == 300;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i % 100 == 0) continue;
        monotone &= *rows[i].edge_energy > *rows[i - 1].edge_energy;
        monotone &= *rows[i].cloud_energy > *rows[i - 1].cloud_energy;
    }
    ok &= expect(monotone, "energy not increasing in payload at a cycle cap");
    return ok;
}

// --- criterion 6: fleet behavior --------------------------------------------

FleetScenario fleet_scenario(int fleet, double total_bits, int task_count) {
    FleetScenario sc;
    sc.fleet_size = fleet;
    sc.total_bits = total_bits;
    sc.task_count = task_count;
    sc.cycles_per_bit = 1e4;
    sc.link = defaults::network_path();
    sc.edge = defaults::edge_platform();
    return sc;
}

bool fleet_properties() {
    bool ok = expect(close_rel(simulate_fleet(fleet_scenario(1, 2e6, 2)).makespan_s, 5.002, 1e-9),
                     "two-task single-server trace != 5.002 s");
    ok &= expect(close_rel(simulate_fleet(fleet_scenario(2, 2e6, 2)).makespan_s, 4.002, 1e-9),
                 "two-task two-server trace != 4.002 s");

    const auto started = std::chrono::steady_clock::now();
    bool monotone = true;
    for (double total : {1e6, 1e7, 1e8}) {
        double previous = 1e300;
        for (int fleet = 1; fleet <= 8; ++fleet) {
            const double makespan = simulate_fleet(fleet_scenario(fleet, total, 100)).makespan_s;
            monotone &= makespan <= previous;
            previous = makespan;
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    ok &= expect(monotone, "makespan grew when a server was added");
    ok &= expect(elapsed < 5.0, "full fleet grid took 5 s or longer");

    // One task degenerates to the closed-form delay of a single offload.
    const FleetScenario solo = fleet_scenario(4, 1e6, 1);
    const Task task{solo.cycles_per_bit * solo.total_bits, solo.total_bits};
    ok &= expect(simulate_fleet(solo).makespan_s ==
                     edge_delay(task, solo.edge, solo.link).total_s,
                 "single task diverges from the one-shot delay");

    bool floors = true;
    for (int fleet : {1, 4, 8}) {
        for (double total : {1e6, 1e7, 1e8}) {
            const double makespan = simulate_fleet(fleet_scenario(fleet, total, 100)).makespan_s;
            floors &= makespan >= (total / 1e6) * (1.0 - 1e-12);
        }
    }
    ok &= expect(floors, "makespan undercuts the uplink transfer floor");

    auto improvement = [](double total) {
        const double one = simulate_fleet(fleet_scenario(1, total, 100)).makespan_s;
        const double eight = simulate_fleet(fleet_scenario(8, total, 100)).makespan_s;
        return (one - eight) / one;
    };
    ok &= expect(improvement(1e6) < improvement(1e8),
                 "small payloads do not benefit less than large ones");
    return ok;
}

// --- criterion 7: band registry ---------------------------------------------

struct RegistryRow {
    int region;
    const char* area;
    const char* label;
    std::vector<FrequencyRange> ranges;
    double bandwidth;
    std::optional<std::array<double, 2>> split;
    Contiguity contiguity;
};

bool registry_faithful() {
    const std::vector<RegistryRow> expected = {
        {1, "Europe", "400 MHz", {{410, 430}, {450, 470}}, 40.0, {{20.0, 20.0}},
         Contiguity::unspecified},
        {1, "Europe", "700 MHz", {{733, 788}}, 60.0, {{30.0, 30.0}}, Contiguity::unspecified},
        {1, "UK", "", {}, 0.0, std::nullopt, Contiguity::unspecified},
        {2, "Americas", "VHF Lower Band", {{25, 50}}, 6.3, std::nullopt,
         Contiguity::unspecified},
        {2, "Americas", "VHF Upper Band", {{150, 174}}, 3.6, std::nullopt,
         Contiguity::non_contiguous},
        {2, "Americas", "220 MHz", {{220, 222}}, 0.1, std::nullopt, Contiguity::unspecified},
        {2, "Americas", "UHF Band", {{450, 470}}, 3.7, std::nullopt,
         Contiguity::non_contiguous},
        {2, "Americas", "T-Band", {{470, 512}}, 6.0, std::nullopt, Contiguity::contiguous},
        {2, "Americas", "700 MHz", {{758, 769}, {788, 799}}, 22.0, {{11.0, 11.0}},
         Contiguity::contiguous},
        {2, "Americas", "700 MHz", {{768, 775}, {798, 805}}, 14.0, {{7.0, 7.0}},
         Contiguity::contiguous},
        {2, "Americas", "800 MHz", {{806, 809}, {851, 854}}, 6.0, {{3.0, 3.0}},
         Contiguity::contiguous},
        {2, "Americas", "800 MHz", {{809, 815}, {854, 860}}, 3.5, {{1.75, 1.75}},
         Contiguity::non_contiguous},
        {2, "Americas", "4.9 GHz", {{4940, 4990}}, 50.0, std::nullopt, Contiguity::contiguous},
        {2, "Americas", "5.9 GHz", {{5850, 5925}}, 75.0, std::nullopt, Contiguity::contiguous},
        {3, "Australia", "4.9 GHz", {{4940, 4990}}, 50.0, std::nullopt, Contiguity::contiguous},
        {3, "Japan", "4.9 GHz", {{4940, 4990}}, 50.0, std::nullopt, Contiguity::contiguous},
        {3, "South Korea", "700 MHz", {{718, 728}, {773, 783}}, 20.0, {{10.0, 10.0}},
         Contiguity::unspecified},
    };

    const auto& registry = load_registry();
    bool rows_ok = registry.size() == expected.size();
    if (rows_ok) {
        for (std::size_t i = 0; i < registry.size(); ++i) {
            const auto& got = registry[i];
            const auto& want = expected[i];
            rows_ok &= got.itu_region == want.region && got.area == want.area &&
                       got.band_label == want.label && got.bandwidth_mhz == want.bandwidth &&
                       got.split_mhz == want.split && got.contiguity == want.contiguity;
            rows_ok &= got.ranges.size() == want.ranges.size();
            if (!rows_ok) break;
            for (std::size_t r = 0; r < got.ranges.size(); ++r)
                rows_ok &= got.ranges[r].low_mhz == want.ranges[r].low_mhz &&
                           got.ranges[r].high_mhz == want.ranges[r].high_mhz;
        }
    }
    bool ok = expect(rows_ok, "registry does not match the transcription fixture");

    ok &= expect(total_bandwidth("Japan") == 50.0, "Japan total != 50 MHz");
    ok &= expect(total_bandwidth("South Korea") == 20.0, "South Korea total != 20 MHz");

    const auto hits = bands_overlapping(694.0, 894.0);
    std::multiset<std::tuple<int, std::string, double>> got;
    for (const auto& h : hits) got.insert({h.itu_region, h.area, h.ranges[0].low_mhz});
    const std::multiset<std::tuple<int, std::string, double>> want = {
        {1, "Europe", 733.0},   {2, "Americas", 758.0}, {2, "Americas", 768.0},
        {2, "Americas", 806.0}, {2, "Americas", 809.0}, {3, "South Korea", 718.0},
    };
    ok &= expect(got == want, "broadband window overlap set mismatch");
    return ok;
}

// --- criterion 8: determinism and round-trip --------------------------------

std::string run_binary(const std::string& binary, const std::string& args, bool& ran) {
    const std::string command = binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        ran = false;
        return "";
    }
    std::string out;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
    ran = pclose(pipe) == 0;
    return out;
}

std::string run_in_process(const std::string& sub) {
    const char* argv[] = {"drpslte", sub.c_str()};
    std::ostringstream out, err;
    run_cli(2, argv, out, err);
    return out.str();
}

bool determinism(const char* binary) {
    bool ok = true;
    if (binary) {
        bool first_ran = false, second_ran = false;
        const std::string a = run_binary(binary, "sweep-delay", first_ran);
        const std::string b = run_binary(binary, "sweep-delay", second_ran);
        ok &= expect(first_ran && second_ran, "CLI runs did not exit cleanly");
        ok &= expect(!a.empty() && a == b, "two CLI sweeps differ byte for byte");
    } else {
        const std::string a = run_in_process("sweep-delay");
        const std::string b = run_in_process("sweep-delay");
        ok &= expect(!a.empty() && a == b, "two in-process sweeps differ byte for byte");
    }

    ScenarioConfig custom;
    custom.scenario_id = "round-trip";
    custom.edge.cpu_hz = 7e9;
    custom.path.rate_bps = 3e6;
    custom.t_radio_edge_s = 1.5e-3;
    custom.rates_bps = {1e6, 2e6, 3e6};
    custom.fleet_sizes = {1, 3, 5};
    custom.users = 42;
    ok &= expect(parse_scenario(emit(custom)) == custom, "config round-trip changed a field");
    ok &= expect(parse_scenario(emit(ScenarioConfig{})) == ScenarioConfig{},
                 "stock config round-trip changed a field");
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    const char* binary = argc > 1 ? argv[1] : nullptr;

    struct Criterion {
        const char* name;
        bool passed;
    };
    const Criterion results[] = {
        {"single-point delay oracle (102.2 ms vs 108.02 ms)", point_oracle()},
        {"delay gap law: 6 ms - cycles * 1.8e-10 s, payload/rate free", gap_law()},
        {"crossover threshold 3.333e7 cycles with ordering flip", crossover_flip()},
        {"20% reduction frontier near 2.2e4 bits, all margins positive", reduction_frontier()},
        {"energy gap law 0.2/bit and cap-wise monotonicity", energy_law()},
        {"fleet hand traces, server monotonicity, floors, scaling", fleet_properties()},
        {"band registry transcription and reference queries", registry_faithful()},
        {"byte-identical sweeps and config round-trip", determinism(binary)},
    };

    int failed = 0;
    for (const auto& r : results) {
        std::printf("%s - %s\n", r.passed ? "PASS" : "FAIL", r.name);
        if (!r.passed) ++failed;
    }
    if (failed == 0)
        std::printf("all %zu acceptance criteria hold\n", std::size(results));
    else
        std::printf("%d of %zu acceptance criteria failing\n", failed, std::size(results));
    return failed == 0 ? 0 : 1;
}
